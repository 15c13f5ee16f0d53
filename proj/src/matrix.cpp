#include "gandg/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace gandg {

IntMatrix IntMatrix::from_rows(const std::vector<IntVec>& rows) {
  int r = int(rows.size());
  int c = r ? int(rows[0].size()) : 0;
  IntMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (int(rows[i].size()) != c) throw std::invalid_argument("IntMatrix: ragged rows");
    for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

IntVec IntMatrix::mul_vec(const IntVec& v) const {
  if (int(v.size()) != cols_) throw std::invalid_argument("IntMatrix::mul_vec: size mismatch");
  IntVec r(rows_, mpz_class(0));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
  return r;
}

namespace {

// Column elimination on m with the same column operations mirrored onto u.
// After processing all rows, columns [lead, n) of m are zero and the matching
// columns of u span the kernel.
void swap_cols(IntMatrix& m, int a, int b) {
  for (int i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}

void addmul_col(IntMatrix& m, int dst, int src, const mpz_class& q) {
  for (int i = 0; i < m.rows(); ++i) m.at(i, dst) += q * m.at(i, src);
}

void neg_col(IntMatrix& m, int c) {
  for (int i = 0; i < m.rows(); ++i) m.at(i, c) = -m.at(i, c);
}

}  // namespace

std::vector<IntVec> row_hnf(std::vector<IntVec> rows) {
  if (rows.empty()) return rows;
  int k = int(rows.size());
  int n = int(rows[0].size());
  int h = 0;
  for (int c = 0; c < n && h < k; ++c) {
    int piv = -1;
    for (int i = h; i < k; ++i)
      if (rows[i][c] != 0) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(rows[h], rows[piv]);
    // Euclid on the column entries below the pivot.
    for (;;) {
      int nz = -1;
      for (int i = h + 1; i < k; ++i)
        if (rows[i][c] != 0) { nz = i; break; }
      if (nz < 0) break;
      if (mpz_cmpabs(rows[nz][c].get_mpz_t(), rows[h][c].get_mpz_t()) < 0) std::swap(rows[h], rows[nz]);
      mpz_class q = rows[nz][c] / rows[h][c];  // truncated, nonzero; shrinks |rows[nz][c]|
      for (int j = 0; j < n; ++j) rows[nz][j] -= q * rows[h][j];
    }
    if (rows[h][c] < 0)
      for (int j = 0; j < n; ++j) rows[h][j] = -rows[h][j];
    // Reduce entries above the pivot into [0, pivot).
    for (int i = 0; i < h; ++i) {
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[h][c].get_mpz_t());
      if (q != 0)
        for (int j = 0; j < n; ++j) rows[i][j] -= q * rows[h][j];
    }
    ++h;
  }
  if (h != k) throw std::invalid_argument("row_hnf: rows are not independent");
  return rows;
}

std::vector<IntVec> hnf_kernel(const IntMatrix& a) {
  int r = a.rows(), n = a.cols();
  IntMatrix m = a;
  IntMatrix u(n, n);
  for (int j = 0; j < n; ++j) u.at(j, j) = 1;

  int lead = 0;
  for (int row = 0; row < r && lead < n; ++row) {
    int piv = -1;
    for (int j = lead; j < n; ++j)
      if (m.at(row, j) != 0) { piv = j; break; }
    if (piv < 0) continue;
    if (piv != lead) { swap_cols(m, lead, piv); swap_cols(u, lead, piv); }
    for (;;) {
      int nz = -1;
      for (int j = lead + 1; j < n; ++j)
        if (m.at(row, j) != 0) { nz = j; break; }
      if (nz < 0) break;
      if (mpz_cmpabs(m.at(row, nz).get_mpz_t(), m.at(row, lead).get_mpz_t()) < 0) {
        swap_cols(m, lead, nz);
        swap_cols(u, lead, nz);
      }
      mpz_class q = m.at(row, nz) / m.at(row, lead);
      addmul_col(m, nz, lead, -q);
      addmul_col(u, nz, lead, -q);
    }
    if (m.at(row, lead) < 0) { neg_col(m, lead); neg_col(u, lead); }
    ++lead;
  }

  std::vector<IntVec> basis;
  basis.reserve(n - lead);
  for (int j = lead; j < n; ++j) {
    IntVec v(n);
    for (int i = 0; i < n; ++i) v[i] = u.at(i, j);
    basis.push_back(std::move(v));
  }
  if (!basis.empty()) basis = row_hnf(std::move(basis));
  for (const auto& v : basis) {
    IntVec av = a.mul_vec(v);
    for (const auto& x : av)
      if (x != 0) throw std::logic_error("hnf_kernel: basis vector fails A v = 0");
  }
  return basis;
}

std::optional<IntVec> int_solve(const IntMatrix& a, const IntVec& b) {
  int r = a.rows(), n = a.cols();
  if (int(b.size()) != r) throw std::invalid_argument("int_solve: size mismatch");
  IntMatrix m = a;
  IntMatrix u(n, n);
  for (int j = 0; j < n; ++j) u.at(j, j) = 1;

  // Same column echelon as hnf_kernel, but we keep the pivot positions to
  // forward-substitute H y = b, then map back through x = U y.
  std::vector<std::pair<int, int>> pivots;  // (row, col)
  int lead = 0;
  for (int row = 0; row < r && lead < n; ++row) {
    int piv = -1;
    for (int j = lead; j < n; ++j)
      if (m.at(row, j) != 0) { piv = j; break; }
    if (piv < 0) continue;
    if (piv != lead) { swap_cols(m, lead, piv); swap_cols(u, lead, piv); }
    for (;;) {
      int nz = -1;
      for (int j = lead + 1; j < n; ++j)
        if (m.at(row, j) != 0) { nz = j; break; }
      if (nz < 0) break;
      if (mpz_cmpabs(m.at(row, nz).get_mpz_t(), m.at(row, lead).get_mpz_t()) < 0) {
        swap_cols(m, lead, nz);
        swap_cols(u, lead, nz);
      }
      mpz_class q = m.at(row, nz) / m.at(row, lead);
      addmul_col(m, nz, lead, -q);
      addmul_col(u, nz, lead, -q);
    }
    if (m.at(row, lead) < 0) { neg_col(m, lead); neg_col(u, lead); }
    pivots.push_back({row, lead});
    ++lead;
  }

  IntVec y(n, mpz_class(0));
  IntVec resid = b;
  for (auto [row, col] : pivots) {
    if (resid[row] == 0) continue;
    mpz_class q, rem;
    mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), resid[row].get_mpz_t(), m.at(row, col).get_mpz_t());
    if (rem != 0) return std::nullopt;
    y[col] = q;
    for (int i = 0; i < r; ++i) resid[i] -= q * m.at(i, col);
  }
  for (const auto& x : resid)
    if (x != 0) return std::nullopt;

  IntVec x(n, mpz_class(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) x[i] += u.at(i, j) * y[j];
  IntVec check = a.mul_vec(x);
  for (int i = 0; i < r; ++i)
    if (check[i] != b[i]) throw std::logic_error("int_solve: verification failed");
  return x;
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVec>& rows) {
  int r = int(rows.size());
  int c = r ? int(rows[0].size()) : 0;
  RatMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (int(rows[i].size()) != c) throw std::invalid_argument("RatMatrix: ragged rows");
    for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

RatMatrix RatMatrix::from_cols(const std::vector<RatVec>& cols) {
  int c = int(cols.size());
  int r = c ? int(cols[0].size()) : 0;
  RatMatrix m(r, c);
  for (int j = 0; j < c; ++j) {
    if (int(cols[j].size()) != r) throw std::invalid_argument("RatMatrix: ragged cols");
    for (int i = 0; i < r; ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

RatVec RatMatrix::mul_vec(const RatVec& v) const {
  if (int(v.size()) != cols_) throw std::invalid_argument("RatMatrix::mul_vec: size mismatch");
  RatVec r(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
  return r;
}

namespace {

// Reduced row echelon form in place; returns pivot columns in order.
std::vector<int> rref(RatMatrix& m) {
  std::vector<int> pivots;
  int lead = 0;
  for (int c = 0; c < m.cols() && lead < m.rows(); ++c) {
    int piv = -1;
    for (int i = lead; i < m.rows(); ++i)
      if (!m.at(i, c).is_zero()) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != lead)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(lead, j), m.at(piv, j));
    Rational inv = Rational(1) / m.at(lead, c);
    for (int j = c; j < m.cols(); ++j) m.at(lead, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == lead || m.at(i, c).is_zero()) continue;
      Rational f = m.at(i, c);
      for (int j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(lead, j);
    }
    pivots.push_back(c);
    ++lead;
  }
  return pivots;
}

}  // namespace

long rational_rank(RatMatrix a) { return long(rref(a).size()); }

std::optional<RatVec> solve(const RatMatrix& a, const RatVec& b) {
  if (int(b.size()) != a.rows()) throw std::invalid_argument("solve: size mismatch");
  RatMatrix m(a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
    m.at(i, a.cols()) = b[i];
  }
  std::vector<int> pivots = rref(m);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  RatVec x(a.cols());
  for (size_t p = 0; p < pivots.size(); ++p) x[pivots[p]] = m.at(int(p), a.cols());
  RatVec check = a.mul_vec(x);
  for (int i = 0; i < a.rows(); ++i)
    if (check[i] != b[i]) throw std::logic_error("solve: verification failed");
  return x;
}

std::vector<RatVec> nullspace(const RatMatrix& a) {
  RatMatrix m = a;
  std::vector<int> pivots = rref(m);
  std::vector<bool> is_pivot(a.cols(), false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<RatVec> basis;
  for (int c = 0; c < a.cols(); ++c) {
    if (is_pivot[c]) continue;
    RatVec v(a.cols());
    v[c] = Rational(1);
    for (size_t p = 0; p < pivots.size(); ++p) v[pivots[p]] = -m.at(int(p), c);
    RatVec check = a.mul_vec(v);
    for (const auto& x : check)
      if (!x.is_zero()) throw std::logic_error("nullspace: basis vector fails A v = 0");
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace gandg
