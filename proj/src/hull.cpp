#include "gandg/hull.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>

#include "gandg/matrix.hpp"

namespace gandg {

namespace {

// Unique positive scaling making v a primitive integer vector; the offset is
// scaled along so the inequality is unchanged.
void make_primitive(RatVec& v, Rational& offset) {
  mpz_class l(1);
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.den().get_mpz_t());
  std::vector<mpz_class> nums(v.size());
  mpz_class g(0);
  for (size_t i = 0; i < v.size(); ++i) {
    nums[i] = v[i].num() * (l / v[i].den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), nums[i].get_mpz_t());
  }
  if (g == 0) throw std::logic_error("make_primitive: zero normal");
  for (size_t i = 0; i < v.size(); ++i) v[i] = Rational(mpz_class(nums[i] / g));
  offset *= Rational(l, g);
}

// Greedy affine frame: base = pts[0], directions = the lexically first
// independent differences; coords = coordinates of every point in the frame.
struct Reduction {
  std::vector<RatVec> dirs;
  std::vector<RatVec> coords;
};

Reduction affine_reduce(const std::vector<RatVec>& pts) {
  size_t n = pts.size();
  int dim = int(pts[0].size());
  const RatVec& base = pts[0];

  struct Row {
    RatVec r;
    int pivot;
  };
  std::vector<Row> ech;
  Reduction red;
  for (size_t i = 1; i < n; ++i) {
    RatVec r = vec_sub(pts[i], base);
    for (const auto& row : ech) {
      Rational f = r[size_t(row.pivot)];
      if (f.is_zero()) continue;
      for (int c = 0; c < dim; ++c) r[size_t(c)] -= f * row.r[size_t(c)];
    }
    int p = -1;
    for (int c = 0; c < dim; ++c)
      if (!r[size_t(c)].is_zero()) {
        p = c;
        break;
      }
    if (p < 0) continue;
    ech.push_back(Row{vec_scale(Rational(1) / r[size_t(p)], r), p});
    red.dirs.push_back(vec_sub(pts[i], base));
  }

  if (red.dirs.empty()) {
    // All points coincide with the base; coordinates are empty vectors.
    red.coords.assign(n, RatVec{});
    return red;
  }
  RatMatrix dm = RatMatrix::from_cols(red.dirs);
  red.coords.resize(n);
  for (size_t i = 0; i < n; ++i) {
    auto c = solve(dm, vec_sub(pts[i], base));
    if (!c) throw std::logic_error("affine_reduce: point escapes its own frame");
    red.coords[i] = std::move(*c);
  }
  return red;
}

// Facet in frame coordinates. Vertex lists are kept sorted; they double as
// the dedup key.
struct RFacet {
  RatVec n;
  Rational off;
  std::vector<int> verts;
};

std::vector<int> contact_set(const std::vector<RatVec>& pts, const RatVec& n, const Rational& off) {
  std::vector<int> v;
  for (size_t i = 0; i < pts.size(); ++i)
    if (dot(n, pts[i]) == off) v.push_back(int(i));
  return v;
}

// Independent directions spanned by a vertex subset.
std::vector<RatVec> span_dirs(const std::vector<RatVec>& pts, const std::vector<int>& verts) {
  std::vector<RatVec> sub;
  sub.reserve(verts.size());
  for (int i : verts) sub.push_back(pts[size_t(i)]);
  return affine_reduce(sub).dirs;
}

// Rotates a supporting functional about its contact flat until the contact
// set spans a hyperplane. Each rotation is an exact min-ratio pivot; the
// contact flat grows by at least one dimension per step.
RFacet seed_facet(const std::vector<RatVec>& pts) {
  int d = int(pts[0].size());
  RatVec n(static_cast<size_t>(d));
  n[0] = Rational(1);
  Rational off = dot(n, pts[0]);
  for (const auto& p : pts) {
    Rational s = dot(n, p);
    if (s > off) off = s;
  }
  std::vector<int> verts = contact_set(pts, n, off);

  for (;;) {
    std::vector<RatVec> dirs = span_dirs(pts, verts);
    if (int(dirs.size()) == d - 1) return RFacet{n, off, verts};

    std::vector<RatVec> rows = dirs;
    rows.push_back(n);
    std::vector<RatVec> perp = nullspace(RatMatrix::from_rows(rows));
    if (perp.empty()) throw std::logic_error("seed_facet: no rotation direction left");
    const RatVec& c0 = pts[size_t(verts[0])];
    const RatVec& w = perp[0];

    // The supporting functionals through the contact flat form the pencil
    // alpha n + w; the largest alpha keeping every point feasible makes at
    // least one off-hyperplane point tight. Parametrizing by the coefficient
    // of n (not of w) keeps the limit hyperplane w itself reachable.
    bool found = false;
    Rational best_alpha;
    for (size_t q = 0; q < pts.size(); ++q) {
      Rational a = dot(n, pts[q]) - off;
      if (a.is_zero()) continue;  // on the current hyperplane
      Rational alpha = (dot(w, pts[q]) - dot(w, c0)) / -a;
      if (!found || alpha > best_alpha) {
        best_alpha = alpha;
        found = true;
      }
    }
    if (!found) throw std::logic_error("seed_facet: points do not affinely span");
    n = vec_add(vec_scale(best_alpha, n), w);
    off = dot(n, c0);
    verts = contact_set(pts, n, off);
  }
}

std::vector<RFacet> enumerate_facets(const std::vector<RatVec>& pts, bool parallel);

// Ridges of a facet = facets of the vertex set inside its own hyperplane.
// A facet with exactly d vertices is a simplex: its ridges are all the
// (d-1)-subsets, no recursion needed.
std::vector<std::vector<int>> facet_ridges(const std::vector<RatVec>& pts, const RFacet& f) {
  int d = int(pts[0].size());
  std::vector<std::vector<int>> ridges;
  if (int(f.verts.size()) == d) {
    for (size_t skip = 0; skip < f.verts.size(); ++skip) {
      std::vector<int> r;
      for (size_t i = 0; i < f.verts.size(); ++i)
        if (i != skip) r.push_back(f.verts[i]);
      ridges.push_back(std::move(r));
    }
    return ridges;
  }
  std::vector<RatVec> sub;
  sub.reserve(f.verts.size());
  for (int i : f.verts) sub.push_back(pts[size_t(i)]);
  Reduction red = affine_reduce(sub);
  if (int(red.dirs.size()) != d - 1) throw std::logic_error("facet_ridges: facet is not a hyperplane section");
  for (const auto& rf : enumerate_facets(red.coords, false)) {
    std::vector<int> r;
    r.reserve(rf.verts.size());
    for (int i : rf.verts) r.push_back(f.verts[size_t(i)]);
    std::sort(r.begin(), r.end());
    ridges.push_back(std::move(r));
  }
  return ridges;
}

// Walks from facet f across one of its ridges to the unique neighbor facet.
RFacet pivot_across(const std::vector<RatVec>& pts, const RFacet& f, const std::vector<int>& ridge) {
  const RatVec& r0 = pts[size_t(ridge[0])];
  std::vector<RatVec> rows;
  for (size_t i = 1; i < ridge.size(); ++i) rows.push_back(vec_sub(pts[size_t(ridge[i])], r0));
  rows.push_back(f.n);
  std::vector<RatVec> perp = nullspace(RatMatrix::from_rows(rows));
  if (perp.size() != 1) throw std::logic_error("pivot_across: ridge direction space is not a line");
  RatVec w = std::move(perp[0]);

  // Orient w away from the facet: negative on its non-ridge vertices.
  std::set<int> on_ridge(ridge.begin(), ridge.end());
  int seen_sign = 0;
  for (int y : f.verts) {
    if (on_ridge.count(y)) continue;
    int s = (dot(w, pts[size_t(y)]) - dot(w, r0)).sign();
    if (s == 0) throw std::logic_error("pivot_across: facet vertex on the ridge hyperplane");
    if (seen_sign == 0) seen_sign = s;
    if (s != seen_sign) throw std::logic_error("pivot_across: facet vertices on both sides of the ridge");
  }
  if (seen_sign == 0) throw std::logic_error("pivot_across: ridge exhausts the facet");
  if (seen_sign > 0) w = vec_neg(w);

  // Neighbor normal = alpha f.n + w with the largest alpha keeping every
  // point feasible; the maximizing point is the first one hit when rotating
  // about the ridge. alpha may be zero or negative, so no candidate is
  // skipped by sign.
  bool found = false;
  Rational best_alpha;
  for (size_t q = 0; q < pts.size(); ++q) {
    Rational a = dot(f.n, pts[q]) - f.off;
    if (a.is_zero()) continue;
    Rational alpha = (dot(w, pts[q]) - dot(w, r0)) / -a;
    if (!found || alpha > best_alpha) {
      best_alpha = alpha;
      found = true;
    }
  }
  if (!found) throw std::logic_error("pivot_across: no point off the facet hyperplane");
  RatVec n = vec_add(vec_scale(best_alpha, f.n), w);
  Rational off = dot(n, r0);
  std::vector<int> verts = contact_set(pts, n, off);
  return RFacet{std::move(n), std::move(off), std::move(verts)};
}

std::vector<RFacet> enumerate_facets(const std::vector<RatVec>& pts, bool parallel) {
  int d = int(pts[0].size());
  if (d == 1) {
    size_t lo = 0, hi = 0;
    for (size_t i = 1; i < pts.size(); ++i) {
      if (pts[i][0] < pts[lo][0]) lo = i;
      if (pts[i][0] > pts[hi][0]) hi = i;
    }
    RFacet top{RatVec{Rational(1)}, pts[hi][0], {int(hi)}};
    RFacet bot{RatVec{Rational(-1)}, -pts[lo][0], {int(lo)}};
    return {std::move(top), std::move(bot)};
  }

  std::map<std::vector<int>, RFacet> done;
  RFacet s = seed_facet(pts);
  std::vector<RFacet> frontier{s};
  done.emplace(s.verts, std::move(s));

  while (!frontier.empty()) {
    std::vector<std::vector<RFacet>> produced(frontier.size());
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
      for (size_t i = 0; i < frontier.size(); ++i)
        for (const auto& ridge : facet_ridges(pts, frontier[i]))
          produced[i].push_back(pivot_across(pts, frontier[i], ridge));
    } else {
      for (size_t i = 0; i < frontier.size(); ++i)
        for (const auto& ridge : facet_ridges(pts, frontier[i]))
          produced[i].push_back(pivot_across(pts, frontier[i], ridge));
    }
    std::vector<RFacet> next;
    for (auto& batch : produced)
      for (auto& nf : batch) {
        auto key = nf.verts;
        if (done.emplace(std::move(key), nf).second) next.push_back(std::move(nf));
      }
    frontier = std::move(next);
  }

  std::vector<RFacet> out;
  out.reserve(done.size());
  for (auto& [k, f] : done) out.push_back(std::move(f));
  return out;
}

void verify_impl(const Polytope& p, bool parallel, bool check_closure) {
  size_t n = p.points.size();
  if (n == 0) throw std::logic_error("polytope: no points");
  for (const auto& pt : p.points)
    if (int(pt.size()) != p.ambient_dim) throw std::logic_error("polytope: inconsistent point dimension");

  std::vector<RatVec> diffs;
  for (size_t i = 1; i < n; ++i) diffs.push_back(vec_sub(p.points[i], p.points[0]));
  if (rational_rank(RatMatrix::from_rows(diffs)) != p.affine_dim)
    throw std::logic_error("polytope: affine_dim disagrees with the points");

  if (long(p.facets.size()) < long(p.affine_dim) + 1) throw std::logic_error("polytope: too few facets");
  for (size_t i = 1; i < p.facets.size(); ++i)
    if (!(p.facets[i - 1].vertices < p.facets[i].vertices))
      throw std::logic_error("polytope: facets not sorted by vertex set");

  std::vector<std::string> errors(p.facets.size());
  auto check_facet = [&](size_t fi) {
    const Facet& f = p.facets[fi];
    try {
      if (f.vertices.empty()) throw std::logic_error("facet with empty vertex set");
      if (!std::is_sorted(f.vertices.begin(), f.vertices.end()) ||
          std::adjacent_find(f.vertices.begin(), f.vertices.end()) != f.vertices.end())
        throw std::logic_error("facet vertex list not sorted unique");
      if (f.vertices.front() < 0 || f.vertices.back() >= int(n))
        throw std::logic_error("facet vertex index out of range");

      mpz_class g(0);
      for (const auto& x : f.normal) {
        if (!x.is_integer()) throw std::logic_error("facet normal not integral");
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.num().get_mpz_t());
      }
      if (g != 1) throw std::logic_error("facet normal not primitive");

      std::set<int> vs(f.vertices.begin(), f.vertices.end());
      for (size_t q = 0; q < n; ++q) {
        Rational s = dot(f.normal, p.points[q]) - f.offset;
        if (s.sign() > 0) throw std::logic_error("facet inequality violated");
        if ((s.sign() == 0) != (vs.count(int(q)) > 0))
          throw std::logic_error("facet equality set differs from vertex list");
      }

      std::vector<RatVec> fd;
      for (size_t i = 1; i < f.vertices.size(); ++i)
        fd.push_back(vec_sub(p.points[size_t(f.vertices[i])], p.points[size_t(f.vertices[0])]));
      if (rational_rank(RatMatrix::from_rows(fd)) != p.affine_dim - 1)
        throw std::logic_error("facet affine dimension is not affine_dim - 1");
    } catch (const std::exception& e) {
      errors[fi] = e.what();
    }
  };

  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (size_t fi = 0; fi < p.facets.size(); ++fi) check_facet(fi);
  } else {
    for (size_t fi = 0; fi < p.facets.size(); ++fi) check_facet(fi);
  }
  for (size_t fi = 0; fi < p.facets.size(); ++fi)
    if (!errors[fi].empty())
      throw std::logic_error("polytope: facet " + std::to_string(fi) + ": " + errors[fi]);

  // Closure: every ridge of every facet lies in exactly one other facet.
  // This is what catches a deleted facet, which no per-facet check can see.
  // The facet walk produces closed lists by construction, so only the public
  // verifiers pay for this.
  if (check_closure && p.affine_dim >= 2) {
    Reduction red = affine_reduce(p.points);
    for (const auto& f : p.facets) {
      RFacet rf{RatVec{}, Rational(), f.vertices};
      for (const auto& ridge : facet_ridges(red.coords, rf)) {
        int cnt = 0;
        for (const auto& g : p.facets)
          if (std::includes(g.vertices.begin(), g.vertices.end(), ridge.begin(), ridge.end())) ++cnt;
        if (cnt != 2)
          throw std::logic_error("polytope: a ridge lies in " + std::to_string(cnt) +
                                 " facets instead of 2; the facet list is not closed");
      }
    }
  }
}

Polytope build_hull(const std::vector<RatVec>& input, bool parallel) {
  if (input.empty()) throw std::invalid_argument("hull_facets: no points");
  int dim = int(input[0].size());
  for (const auto& p : input)
    if (int(p.size()) != dim) throw std::invalid_argument("hull_facets: inconsistent dimensions");

  // Canonical internal order, independent of input order.
  std::vector<int> perm(input.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(),
            [&](int a, int b) { return vec_lex_greater(input[size_t(a)], input[size_t(b)]); });
  std::vector<RatVec> pts;
  pts.reserve(input.size());
  for (int i : perm) pts.push_back(input[size_t(i)]);
  for (size_t i = 1; i < pts.size(); ++i)
    if (pts[i] == pts[i - 1]) throw std::invalid_argument("hull_facets: duplicate point");

  Reduction red = affine_reduce(pts);
  int d = int(red.dirs.size());
  if (d < 2) throw std::invalid_argument("hull_facets: points must affinely span at least 2 dimensions");

  std::vector<RFacet> rfacets = enumerate_facets(red.coords, parallel);

  // Back to ambient coordinates: solve dirs^T n = n_reduced with free
  // variables zero, then scale to a primitive integer normal.
  RatMatrix dt = RatMatrix::from_cols(red.dirs).transpose();
  Polytope poly;
  poly.points = input;
  poly.ambient_dim = dim;
  poly.affine_dim = d;
  for (const auto& rf : rfacets) {
    auto n_amb = solve(dt, rf.n);
    if (!n_amb) throw std::logic_error("hull_facets: ambient normal solve failed");
    Facet f;
    f.normal = std::move(*n_amb);
    f.offset = dot(f.normal, pts[0]) + rf.off;
    make_primitive(f.normal, f.offset);
    for (int v : rf.verts) f.vertices.push_back(perm[size_t(v)]);
    std::sort(f.vertices.begin(), f.vertices.end());
    poly.facets.push_back(std::move(f));
  }
  std::sort(poly.facets.begin(), poly.facets.end(),
            [](const Facet& a, const Facet& b) { return a.vertices < b.vertices; });
  verify_impl(poly, parallel, false);
  return poly;
}

}  // namespace

Polytope hull_facets(const std::vector<RatVec>& points) { return build_hull(points, true); }

Polytope hull_facets_serial(const std::vector<RatVec>& points) { return build_hull(points, false); }

void verify_polytope(const Polytope& p) { verify_impl(p, true, true); }

void verify_polytope_serial(const Polytope& p) { verify_impl(p, false, true); }

std::map<size_t, size_t> facet_size_histogram(const Polytope& p) {
  std::map<size_t, size_t> h;
  for (const auto& f : p.facets) ++h[f.vertices.size()];
  return h;
}

}  // namespace gandg
