#include <omp.h>

#include <stdexcept>

#include "gandg/matrix.hpp"
#include "gandg/oracles.hpp"

namespace gandg {

namespace {

// eps is realizable as <w_j, v> = eps_j iff eps is orthogonal to every
// rational dependence among the weights. This is a different route from the
// witness solver's depth-first echelon search on purpose.
std::vector<std::vector<int>> scan_patterns(const WeightSystem& ws, bool parallel) {
  const auto& wts = ws.weights;
  int n = int(wts.size());
  if (n > 20) throw std::invalid_argument("pm_one_patterns: weight system too large to enumerate");

  // Kernel of the n-column weight matrix: rows of the transpose span the
  // dependences.
  RatMatrix wm = RatMatrix::from_cols(wts);
  std::vector<RatVec> kernel = nullspace(wm);

  unsigned long long total = 1ull << n;
  std::vector<char> hit(size_t(total), 0);

  auto test_mask = [&](unsigned long long mask) {
    for (const auto& k : kernel) {
      Rational s;
      for (int j = 0; j < n; ++j) {
        if (k[size_t(j)].is_zero()) continue;
        if (mask & (1ull << j))
          s -= k[size_t(j)];
        else
          s += k[size_t(j)];
      }
      if (!s.is_zero()) return false;
    }
    return true;
  };

  if (parallel) {
#pragma omp parallel for schedule(static)
    for (unsigned long long mask = 0; mask < total; ++mask) hit[size_t(mask)] = test_mask(mask);
  } else {
    for (unsigned long long mask = 0; mask < total; ++mask) hit[size_t(mask)] = test_mask(mask);
  }

  std::vector<std::vector<int>> out;
  for (unsigned long long mask = 0; mask < total; ++mask) {
    if (!hit[size_t(mask)]) continue;
    std::vector<int> eps(static_cast<size_t>(n));
    RatVec rhs(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) {
      eps[size_t(j)] = (mask & (1ull << j)) ? -1 : 1;
      rhs[size_t(j)] = Rational(eps[size_t(j)]);
    }
    // Accepted patterns are re-checked by an exact solve of <w_j, v> = eps_j.
    auto v = solve(RatMatrix::from_rows(wts), rhs);
    if (!v) throw std::logic_error("pm_one_patterns: kernel test and solve disagree");
    out.push_back(std::move(eps));
  }
  return out;
}

}  // namespace

std::vector<std::vector<int>> pm_one_patterns(const WeightSystem& ws) { return scan_patterns(ws, true); }

std::vector<std::vector<int>> pm_one_patterns_serial(const WeightSystem& ws) {
  return scan_patterns(ws, false);
}

}  // namespace gandg
