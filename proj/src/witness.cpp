#include "gandg/witness.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

namespace gandg {

namespace {

// Descending j-element tuples from {1..m}, listed lex-ascending. This is the
// standard ordered basis of the j-th wedge power.
std::vector<std::vector<long>> wedge_tuples(long m, long j) {
  if (j == 0) return {{}};
  std::vector<std::vector<long>> out;
  for (long top = j; top <= m; ++top)
    for (auto& sub : wedge_tuples(top - 1, j - 1)) {
      std::vector<long> tup{top};
      tup.insert(tup.end(), sub.begin(), sub.end());
      out.push_back(std::move(tup));
    }
  return out;
}

// Weight matrix with columns the weights, all denominators cleared by the
// global lcm. Scaling by a positive constant does not change the kernel.
IntMatrix cleared_weight_matrix(const std::vector<RatVec>& weights) {
  if (weights.empty()) throw std::invalid_argument("cleared_weight_matrix: no weights");
  int dim = int(weights[0].size());
  mpz_class l(1);
  for (const auto& w : weights)
    for (const auto& x : w) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.den().get_mpz_t());
  IntMatrix m(dim, int(weights.size()));
  for (int col = 0; col < int(weights.size()); ++col) {
    if (int(weights[col].size()) != dim) throw std::invalid_argument("cleared_weight_matrix: ragged weights");
    for (int row = 0; row < dim; ++row) m.at(row, col) = (weights[col][row] * Rational(l)).to_mpz();
  }
  return m;
}

long exp_as_long(const mpz_class& e) {
  if (!e.fits_slong_p()) throw std::domain_error("relation exponent out of range");
  return e.get_si();
}

}  // namespace

// Recomputes every check bit from the stored content. Also used to re-verify
// a witness deserialized from JSON, so nothing here trusts the constructors.
void recheck_witness(Witness& w) {
  size_t n = w.weights.size();
  if (n == 0) throw std::invalid_argument("witness: empty weight list");

  if (w.kind == WitnessKind::wedge) {
    if (w.group_diag_q.size() != n || w.algebra_diag_q.size() != n)
      throw std::invalid_argument("witness: diagonal length mismatch");
    if (w.m < 2 || w.j < 1 || w.j >= w.m) throw std::invalid_argument("witness: bad wedge parameters");
    if (w.modulus.m != w.m || w.modulus.c != Rational(w.j, w.j - w.m))
      throw std::invalid_argument("witness: modulus disagrees with wedge parameters");

    w.entrywise_equal = true;
    for (size_t k = 0; k < n; ++k)
      if (w.group_diag_q[k] != w.algebra_diag_q[k]) w.entrywise_equal = false;

    QuotientRingElement tr = QuotientRingElement::zero(w.modulus);
    for (const auto& d : w.algebra_diag_q) tr += d;
    w.trace_zero = tr.is_zero();
  } else {
    if (w.group_diag_g.size() != n || w.algebra_diag_g.size() != n)
      throw std::invalid_argument("witness: diagonal length mismatch");
    for (const auto& d : w.group_diag_g)
      if (!(d * d + GaussianRational(1)).is_zero())
        throw std::invalid_argument("witness: torus diagonal entry is not +-i");

    w.entrywise_equal = true;
    for (size_t k = 0; k < n; ++k)
      if (w.group_diag_g[k] != w.algebra_diag_g[k]) w.entrywise_equal = false;

    GaussianRational tr;
    for (const auto& d : w.algebra_diag_g) tr += d;
    w.trace_zero = tr.is_zero();
  }

  // The relation list must be exactly the canonical kernel basis of the
  // weight matrix, and every relation must hold both additively on the
  // weights and multiplicatively on the group diagonal.
  w.relations_ok = (w.relations == hnf_kernel(cleared_weight_matrix(w.weights)));
  for (const auto& rel : w.relations) {
    if (rel.size() != n) {
      w.relations_ok = false;
      break;
    }
    RatVec sum(w.weights[0].size());
    for (size_t k = 0; k < n; ++k)
      if (rel[k] != 0) sum = vec_add(sum, vec_scale(Rational(rel[k]), w.weights[k]));
    if (!is_zero_vec(sum)) w.relations_ok = false;

    if (w.kind == WitnessKind::wedge) {
      QuotientRingElement prod = QuotientRingElement::one(w.modulus);
      for (size_t k = 0; k < n; ++k)
        if (rel[k] != 0) prod *= quotient_pow(w.group_diag_q[k], exp_as_long(rel[k]));
      if (!prod.is_one()) w.relations_ok = false;
    } else {
      GaussianRational prod(1);
      Rational eps_sum;
      for (size_t k = 0; k < n; ++k) {
        if (rel[k] == 0) continue;
        prod *= w.group_diag_g[k].pow(exp_as_long(rel[k]));
        eps_sum += Rational(rel[k]) * w.group_diag_g[k].im();
      }
      // sum_k a_k eps_k = <sum a_k w_k, v> = 0, and then the product of
      // (eps_k i)^(a_k) collapses to i^0 = 1; both are checked directly.
      if (!prod.is_one() || !eps_sum.is_zero()) w.relations_ok = false;
    }
  }
}

Witness slm_wedge_witness(long m, long j) {
  if (m < 2) throw std::invalid_argument("slm_wedge_witness: need m >= 2");
  if (j < 1 || j >= m) throw std::invalid_argument("slm_wedge_witness: need 0 < j < m");

  Witness w;
  w.kind = WitnessKind::wedge;
  w.type = TypeLabel::A;
  w.rank = int(m - 1);
  w.lambda_coeffs.assign(size_t(m - 1), 0);
  w.lambda_coeffs[size_t(j - 1)] = 1;
  w.m = m;
  w.j = j;
  w.modulus = QuotientModulus{m, Rational(j, j - m)};

  QuotientRingElement t = QuotientRingElement::t(w.modulus);
  QuotientRingElement tj = quotient_pow(t, j);
  QuotientRingElement tjm = quotient_pow(t, j - m);  // negative power: goes through the ring inverse
  // Algebra route: (t^j / j) times the eigenvalue of diag(1,...,1,1-m), which
  // is j off the last axis and j - m on it.
  QuotientRingElement tj_over_j = tj * QuotientRingElement::constant(w.modulus, Rational(1, j));
  QuotientRingElement alg_out = tj_over_j * QuotientRingElement::constant(w.modulus, Rational(j));
  QuotientRingElement alg_in = tj_over_j * QuotientRingElement::constant(w.modulus, Rational(j - m));

  for (const auto& tup : wedge_tuples(m, j)) {
    bool has_m = std::find(tup.begin(), tup.end(), m) != tup.end();
    w.group_diag_q.push_back(has_m ? tjm : tj);
    w.algebra_diag_q.push_back(has_m ? alg_in : alg_out);
    RatVec wb(size_t(m), Rational(-j, m));
    for (long i : tup) wb[size_t(i - 1)] += Rational(1);
    w.weights.push_back(std::move(wb));
  }
  w.relations = hnf_kernel(cleared_weight_matrix(w.weights));
  recheck_witness(w);
  return w;
}

RatVec pm_one_vector(const WeightSystem& ws) {
  const RootSystem& rs = *ws.rs;
  if (rs.type != TypeLabel::B && rs.type != TypeLabel::C && rs.type != TypeLabel::D)
    throw std::invalid_argument("pm_one_vector: defined for types B, C, D");
  const int dim = rs.ambient_dim;
  const auto& wts = ws.weights;

  // Incremental row echelon over the constraints <w, v> = eps chosen so far.
  // Rows are normalized to 1 at their pivot and stored in insertion order;
  // each new constraint is reduced against all of them.
  struct Row {
    RatVec r;
    Rational rhs;
    int pivot;
  };
  std::vector<Row> ech;

  auto reduce = [&](const RatVec& wt) {
    RatVec r = wt;
    Rational acc;
    for (const auto& row : ech) {
      Rational f = r[size_t(row.pivot)];
      if (f.is_zero()) continue;
      for (int c = 0; c < dim; ++c) r[size_t(c)] -= f * row.r[size_t(c)];
      acc += f * row.rhs;
    }
    return std::pair<RatVec, Rational>(std::move(r), std::move(acc));
  };

  std::function<bool(size_t)> go = [&](size_t idx) -> bool {
    if (idx == wts.size()) return true;
    auto [r, acc] = reduce(wts[idx]);
    int pivot = -1;
    for (int c = 0; c < dim; ++c)
      if (!r[size_t(c)].is_zero()) {
        pivot = c;
        break;
      }
    if (pivot < 0) {
      // Value is forced by earlier choices; prune unless it lands on +-1.
      return (acc == Rational(1) || acc == Rational(-1)) && go(idx + 1);
    }
    for (int sign : {1, -1}) {
      Rational lead = r[size_t(pivot)];
      ech.push_back(Row{vec_scale(Rational(1) / lead, r), (Rational(sign) - acc) / lead, pivot});
      if (go(idx + 1)) return true;
      ech.pop_back();
    }
    return false;
  };

  if (!go(0)) throw std::runtime_error("pm_one_vector: no +-1 vector exists for " + rs.name());

  std::vector<RatVec> rows;
  RatVec rhs;
  for (const auto& row : ech) {
    rows.push_back(row.r);
    rhs.push_back(row.rhs);
  }
  auto v = solve(RatMatrix::from_rows(rows), rhs);
  if (!v) throw std::logic_error("pm_one_vector: echelon system inconsistent");
  for (const auto& wt : wts) {
    Rational p = pairing(rs, wt, *v);
    if (p != Rational(1) && p != Rational(-1)) throw std::logic_error("pm_one_vector: verification failed");
  }
  return *v;
}

Witness pm_i_torus_witness(const WeightSystem& ws, const RatVec& v) {
  Witness w;
  w.kind = WitnessKind::torus_pm_i;
  w.type = ws.rs->type;
  w.rank = ws.rs->rank;
  w.lambda_coeffs = ws.lambda_coeffs;
  w.torus_vector = v;
  w.weights = ws.weights;
  for (const auto& wt : ws.weights) {
    Rational eps = pairing(*ws.rs, wt, v);
    if (eps != Rational(1) && eps != Rational(-1))
      throw std::invalid_argument("pm_i_torus_witness: <w, v> = " + eps.str() + " is not +-1");
    GaussianRational d(Rational(0), eps);
    w.group_diag_g.push_back(d);
    w.algebra_diag_g.push_back(d);
  }
  w.relations = hnf_kernel(cleared_weight_matrix(w.weights));
  recheck_witness(w);
  return w;
}

Witness classical_minuscule_witness(TypeLabel t, int rank, const std::vector<long>& coeffs) {
  RootSystem rs = build_root_system(t, rank);
  if (!is_minuscule(rs, coeffs))
    throw std::invalid_argument("classical_minuscule_witness: weight is not minuscule for " + rs.name());
  switch (t) {
    case TypeLabel::A: {
      long j = 0;
      for (int i = 0; i < rank; ++i)
        if (coeffs[size_t(i)]) j = i + 1;
      return slm_wedge_witness(rank + 1, j);
    }
    case TypeLabel::B:
    case TypeLabel::C:
    case TypeLabel::D: {
      WeightSystem ws = weight_system(std::make_shared<RootSystem>(std::move(rs)), coeffs);
      return pm_i_torus_witness(ws, pm_one_vector(ws));
    }
    default:
      throw std::domain_error("classical_minuscule_witness: " + rs.name() +
                              " is exceptional; no witness exists (see the obstruction certificate)");
  }
}

bool weights_negation_closed(const std::vector<RatVec>& weights) {
  std::set<RatVec, decltype(&vec_lex_less)> s(&vec_lex_less);
  for (const auto& w : weights) s.insert(w);
  for (const auto& w : weights)
    if (!s.count(vec_neg(w))) return false;
  return true;
}

std::vector<std::array<int, 4>> equal_sum_quadruples(const std::vector<RatVec>& weights, size_t cap,
                                                     unsigned seed) {
  int n = int(weights.size());
  std::map<RatVec, std::vector<std::pair<int, int>>, decltype(&vec_lex_less)> buckets(&vec_lex_less);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) buckets[vec_add(weights[size_t(i)], weights[size_t(j)])].push_back({i, j});

  std::vector<const std::vector<std::pair<int, int>>*> big;
  size_t total = 0;
  for (const auto& [sum, pairs] : buckets) {
    size_t k = pairs.size();
    if (k >= 2) {
      big.push_back(&pairs);
      total += k * (k - 1) / 2;
    }
  }

  std::vector<std::array<int, 4>> out;
  auto quad_at = [&](const std::vector<std::pair<int, int>>& pairs, size_t a, size_t b) {
    return std::array<int, 4>{pairs[a].first, pairs[a].second, pairs[b].first, pairs[b].second};
  };

  if (total <= cap) {
    for (const auto* pairs : big)
      for (size_t a = 0; a < pairs->size(); ++a)
        for (size_t b = a + 1; b < pairs->size(); ++b) out.push_back(quad_at(*pairs, a, b));
    return out;
  }

  // Deterministic sample: mt19937 output reduced by hand (the distribution
  // adaptors are not pinned down by the standard).
  std::mt19937 gen(seed);
  auto draw = [&](size_t bound) {
    unsigned long long x = (static_cast<unsigned long long>(gen()) << 32) | gen();
    return size_t(x % bound);
  };
  // Draw until cap distinct quadruples are collected; total > cap here, so
  // enough exist.
  std::set<std::array<int, 4>> seen;
  while (out.size() < cap) {
    size_t target = draw(total);
    for (const auto* pairs : big) {
      size_t k = pairs->size(), count = k * (k - 1) / 2;
      if (target >= count) {
        target -= count;
        continue;
      }
      // Unrank target within this bucket's pair-of-pairs.
      size_t a = 0, before = 0;
      while (before + (k - 1 - a) <= target) {
        before += k - 1 - a;
        ++a;
      }
      size_t b = a + 1 + (target - before);
      auto q = quad_at(*pairs, a, b);
      if (seen.insert(q).second) out.push_back(q);
      break;
    }
  }
  return out;
}

}  // namespace gandg
