#include <omp.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "gandg/matrix.hpp"
#include "gandg/oracles.hpp"

namespace gandg {

namespace {

constexpr unsigned long long kSubsetCap = 10'000'000ull;

// The oracle keeps its own affine reduction (same canonical convention as
// the hull: base = first point, greedy independent differences, free
// variables zero) so comparisons are exact without sharing the hull's code
// path.
struct OracleFrame {
  std::vector<RatVec> dirs;
  std::vector<RatVec> coords;
};

OracleFrame oracle_reduce(const std::vector<RatVec>& pts) {
  int dim = int(pts[0].size());
  const RatVec& base = pts[0];
  OracleFrame fr;
  std::vector<std::pair<RatVec, int>> ech;  // normalized row, pivot
  for (size_t i = 1; i < pts.size(); ++i) {
    RatVec r = vec_sub(pts[i], base);
    for (const auto& [row, piv] : ech) {
      Rational f = r[size_t(piv)];
      if (f.is_zero()) continue;
      for (int c = 0; c < dim; ++c) r[size_t(c)] -= f * row[size_t(c)];
    }
    int p = -1;
    for (int c = 0; c < dim; ++c)
      if (!r[size_t(c)].is_zero()) {
        p = c;
        break;
      }
    if (p < 0) continue;
    ech.push_back({vec_scale(Rational(1) / r[size_t(p)], r), p});
    fr.dirs.push_back(vec_sub(pts[i], base));
  }
  RatMatrix dm = RatMatrix::from_cols(fr.dirs);
  fr.coords.reserve(pts.size());
  for (const auto& p : pts) {
    auto c = solve(dm, vec_sub(p, base));
    if (!c) throw std::logic_error("oracle_reduce: inconsistent frame");
    fr.coords.push_back(std::move(*c));
  }
  return fr;
}

unsigned long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  unsigned long long b = 1;
  for (int i = 0; i < k; ++i) {
    unsigned long long next = b * (unsigned long long)(n - i);
    if (next / (unsigned long long)(n - i) != b) throw std::overflow_error("binomial overflow");
    b = next / (unsigned long long)(i + 1);
  }
  return b;
}

// Subset of {0..n-1} with the given rank in lexicographic order.
std::vector<int> unrank_subset(int n, int k, unsigned long long rank) {
  std::vector<int> s;
  int x = 0;
  for (int slot = 0; slot < k; ++slot) {
    for (;; ++x) {
      unsigned long long c = binomial(n - x - 1, k - slot - 1);
      if (rank < c) break;
      rank -= c;
    }
    s.push_back(x++);
  }
  return s;
}

struct OracleFacet {
  RatVec n;
  Rational off;
  std::vector<int> verts;
};

// Supporting hyperplane through the subset, if the subset spans one and all
// points lie weakly on one side. Normal oriented so every point satisfies
// n . p <= off.
bool supporting_hyperplane(const std::vector<RatVec>& coords, const std::vector<int>& sub,
                           OracleFacet& out) {
  const RatVec& s0 = coords[size_t(sub[0])];
  std::vector<RatVec> diffs;
  for (size_t i = 1; i < sub.size(); ++i) diffs.push_back(vec_sub(coords[size_t(sub[i])], s0));
  std::vector<RatVec> perp = nullspace(RatMatrix::from_rows(diffs));
  if (int(perp.size()) != 1) return false;  // subset does not span a hyperplane
  RatVec n = std::move(perp[0]);

  bool above = false, below = false;
  for (const auto& q : coords) {
    int s = (dot(n, q) - dot(n, s0)).sign();
    above = above || s > 0;
    below = below || s < 0;
    if (above && below) return false;
  }
  if (above) n = vec_neg(n);
  out.n = std::move(n);
  out.off = dot(out.n, s0);
  out.verts.clear();
  for (size_t q = 0; q < coords.size(); ++q)
    if (dot(out.n, coords[q]) == out.off) out.verts.push_back(int(q));
  return true;
}

Polytope oracle_hull(const std::vector<RatVec>& input, bool parallel) {
  if (input.empty()) throw std::invalid_argument("hull oracle: no points");
  int dim = int(input[0].size());
  for (const auto& p : input)
    if (int(p.size()) != dim) throw std::invalid_argument("hull oracle: inconsistent dimensions");

  std::vector<int> perm(input.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(),
            [&](int a, int b) { return vec_lex_greater(input[size_t(a)], input[size_t(b)]); });
  std::vector<RatVec> pts;
  for (int i : perm) pts.push_back(input[size_t(i)]);
  for (size_t i = 1; i < pts.size(); ++i)
    if (pts[i] == pts[i - 1]) throw std::invalid_argument("hull oracle: duplicate point");
  if (pts.size() < 3)
    throw std::invalid_argument("hull oracle: points must affinely span at least 2 dimensions");

  OracleFrame fr = oracle_reduce(pts);
  int d = int(fr.dirs.size());
  if (d < 2) throw std::invalid_argument("hull oracle: points must affinely span at least 2 dimensions");

  int n = int(pts.size());
  unsigned long long total = binomial(n, d);
  if (total > kSubsetCap) throw std::invalid_argument("hull oracle: subset count exceeds cap");

  // Keyed by vertex set: many subsets of one facet map to the same entry.
  std::map<std::vector<int>, OracleFacet> found;
  if (parallel) {
    std::vector<std::map<std::vector<int>, OracleFacet>> local;
#pragma omp parallel
    {
#pragma omp single
      local.resize(size_t(omp_get_num_threads()));
#pragma omp for schedule(dynamic, 512)
      for (unsigned long long r = 0; r < total; ++r) {
        OracleFacet f;
        if (supporting_hyperplane(fr.coords, unrank_subset(n, d, r), f)) {
          auto key = f.verts;
          local[size_t(omp_get_thread_num())].emplace(std::move(key), std::move(f));
        }
      }
    }
    for (auto& m : local)
      for (auto& [k, f] : m) found.emplace(k, std::move(f));
  } else {
    for (unsigned long long r = 0; r < total; ++r) {
      OracleFacet f;
      if (supporting_hyperplane(fr.coords, unrank_subset(n, d, r), f)) {
        auto key = f.verts;
        found.emplace(std::move(key), std::move(f));
      }
    }
  }

  RatMatrix dt = RatMatrix::from_cols(fr.dirs).transpose();
  Polytope poly;
  poly.points = input;
  poly.ambient_dim = dim;
  poly.affine_dim = d;
  for (auto& [k, of] : found) {
    auto n_amb = solve(dt, of.n);
    if (!n_amb) throw std::logic_error("hull oracle: ambient normal solve failed");
    Facet f;
    f.normal = std::move(*n_amb);
    f.offset = dot(f.normal, pts[0]) + of.off;
    // Primitive integer scaling, same convention as the hull.
    mpz_class l(1);
    for (const auto& x : f.normal) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.den().get_mpz_t());
    mpz_class g(0);
    std::vector<mpz_class> nums(f.normal.size());
    for (size_t i = 0; i < f.normal.size(); ++i) {
      nums[i] = f.normal[i].num() * (l / f.normal[i].den());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), nums[i].get_mpz_t());
    }
    if (g == 0) throw std::logic_error("hull oracle: zero normal");
    for (size_t i = 0; i < f.normal.size(); ++i) f.normal[i] = Rational(mpz_class(nums[i] / g));
    f.offset *= Rational(l, g);
    for (int v : of.verts) f.vertices.push_back(perm[size_t(v)]);
    std::sort(f.vertices.begin(), f.vertices.end());
    poly.facets.push_back(std::move(f));
  }
  std::sort(poly.facets.begin(), poly.facets.end(),
            [](const Facet& a, const Facet& b) { return a.vertices < b.vertices; });
  return poly;
}

}  // namespace

Polytope hull_facets_bruteforce(const std::vector<RatVec>& points) { return oracle_hull(points, true); }

Polytope hull_facets_bruteforce_serial(const std::vector<RatVec>& points) {
  return oracle_hull(points, false);
}

}  // namespace gandg
