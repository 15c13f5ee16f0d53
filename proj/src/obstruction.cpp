#include "gandg/obstruction.hpp"

#include <algorithm>
#include <stdexcept>

#include "gandg/matrix.hpp"
#include "gandg/witness.hpp"

namespace gandg {

IncidenceChecks run_incidence_checks(const std::vector<RatVec>& weights) {
  IncidenceChecks c;
  auto fail = [&](std::string what) {
    if (c.detail.empty()) c.detail = std::move(what);
  };

  c.count_ok = weights.size() == 27;
  if (!c.count_ok) fail("expected 27 weights, got " + std::to_string(weights.size()));

  c.distinct = true;
  for (size_t i = 0; i < weights.size() && c.distinct; ++i)
    for (size_t j = i + 1; j < weights.size(); ++j)
      if (weights[i] == weights[j]) {
        c.distinct = false;
        fail("weights " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
        break;
      }

  const Rational diag(4, 3), inc(-2, 3), skew(1, 3);
  c.diag_ok = true;
  for (size_t i = 0; i < weights.size(); ++i) {
    if (dot(weights[i], weights[i]) != diag) {
      c.diag_ok = false;
      fail("weight " + std::to_string(i) + " has norm " + dot(weights[i], weights[i]).str() +
           ", expected 4/3");
      break;
    }
  }

  c.offdiag_ok = true;
  c.incident_pair_count = 0;
  std::vector<long> degree(weights.size(), 0);
  for (size_t i = 0; i < weights.size() && c.offdiag_ok; ++i)
    for (size_t j = i + 1; j < weights.size(); ++j) {
      Rational p = dot(weights[i], weights[j]);
      if (p == inc) {
        ++c.incident_pair_count;
        ++degree[i];
        ++degree[j];
      } else if (p != skew) {
        c.offdiag_ok = false;
        fail("pairing of weights " + std::to_string(i) + ", " + std::to_string(j) + " is " + p.str() +
             ", expected 1/3 or -2/3");
        break;
      }
    }

  c.degree_ok = c.offdiag_ok;
  if (c.offdiag_ok)
    for (size_t i = 0; i < weights.size(); ++i)
      if (degree[i] != 10) {
        c.degree_ok = false;
        fail("weight " + std::to_string(i) + " is incident to " + std::to_string(degree[i]) +
             " others, expected 10");
        break;
      }
  if (c.all() == false && c.detail.empty()) fail("incident pair count " + std::to_string(c.incident_pair_count));
  return c;
}

IncidenceGraph incidence_graph(std::vector<RatVec> weights) {
  IncidenceGraph g;
  g.weights = std::move(weights);
  g.checks = run_incidence_checks(g.weights);
  if (!g.checks.all()) throw std::invalid_argument("incidence_graph: " + g.checks.detail);

  size_t n = g.weights.size();
  g.incident.assign(n, std::vector<bool>(n, false));
  const Rational inc(-2, 3);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (dot(g.weights[i], g.weights[j]) == inc) {
        g.incident[i][j] = g.incident[j][i] = true;
        g.incident_pairs.push_back({int(i), int(j)});
      }
  return g;
}

IncidenceGraph e6_incidence(const WeightSystem& ws) {
  if (ws.rs->type != TypeLabel::E || ws.rs->rank != 6)
    throw std::invalid_argument("e6_incidence: weight system is not of type E6");
  return incidence_graph(ws.weights);
}

namespace {

// Index lookup for weight vectors.
struct WeightIndex {
  const std::vector<RatVec>* w;
  int find(const RatVec& v) const {
    for (size_t i = 0; i < w->size(); ++i)
      if ((*w)[i] == v) return int(i);
    return -1;
  }
};

TripleRecord check_triple(const IncidenceGraph& g, const WeightIndex& idx, int i, int j, int k) {
  TripleRecord r;
  r.triple = {i, j, k};
  const auto& W = g.weights;
  const int n = int(W.size());
  std::array<std::pair<int, int>, 3> pairs{{{i, j}, {i, k}, {j, k}}};
  r.incident_count = 0;
  for (auto [a, b] : pairs)
    if (g.incident[size_t(a)][size_t(b)]) ++r.incident_count;

  auto in_triple = [&](int m) { return m == i || m == j || m == k; };
  auto fail = [&](std::string what) {
    r.ok = false;
    r.detail = std::move(what);
  };
  r.ok = true;

  switch (r.incident_count) {
    case 0: {
      // Pairwise skew: some weight incident to all three has each negated
      // pair sum back in the system, giving three equal-sum pairs.
      r.common = -1;
      for (int l = 0; l < n && r.common < 0; ++l) {
        if (in_triple(l)) continue;
        if (!(g.incident[size_t(l)][size_t(i)] && g.incident[size_t(l)][size_t(j)] &&
              g.incident[size_t(l)][size_t(k)]))
          continue;
        std::array<int, 3> sums;
        bool all_in = true;
        for (int t = 0; t < 3; ++t) {
          RatVec target = vec_neg(vec_add(W[size_t(l)], W[size_t(r.triple[size_t(t)])]));
          sums[size_t(t)] = idx.find(target);
          all_in = all_in && sums[size_t(t)] >= 0;
        }
        if (all_in) {
          r.common = l;
          r.sum_indices = sums;
        }
      }
      if (r.common < 0) fail("no incident weight with all three negated sums in the system");
      // The three pairs (sum_t, triple_t) share the sum -w_common.
      if (r.ok) {
        RatVec want = vec_neg(W[size_t(r.common)]);
        for (int t = 0; t < 3; ++t)
          if (vec_add(W[size_t(r.sum_indices[size_t(t)])], W[size_t(r.triple[size_t(t)])]) != want)
            fail("equal-sum identity failed");
      }
      break;
    }
    case 1: {
      int a = -1, b = -1, cthird = -1;
      for (auto [x, y] : pairs)
        if (g.incident[size_t(x)][size_t(y)]) {
          a = x;
          b = y;
        }
      cthird = i + j + k - a - b;
      RatVec target = vec_sub(vec_add(W[size_t(a)], W[size_t(b)]), W[size_t(cthird)]);
      r.fourth = idx.find(target);
      if (r.fourth < 0)
        fail("w_a + w_b - w_c is not a weight");
      else if (in_triple(r.fourth))
        fail("w_a + w_b - w_c landed inside the triple");
      break;
    }
    case 2: {
      // Two incident pairs share the apex; the other two weights are skew.
      int apex = -1;
      if (g.incident[size_t(i)][size_t(j)] && g.incident[size_t(i)][size_t(k)])
        apex = i;
      else if (g.incident[size_t(i)][size_t(j)] && g.incident[size_t(j)][size_t(k)])
        apex = j;
      else
        apex = k;
      std::array<int, 2> sk{};
      int pos = 0;
      for (int m : {i, j, k})
        if (m != apex) sk[size_t(pos++)] = m;
      r.apex = apex;
      r.skew_pair = sk;
      if (g.incident[size_t(sk[0])][size_t(sk[1])]) {
        fail("expected the non-apex pair to be skew");
        break;
      }
      r.n_both = r.n_either = r.n_skew_both = r.n_apex_incident = 0;
      r.outside_skew = -1;
      for (int m = 0; m < n; ++m) {
        bool inc0 = g.incident[size_t(m)][size_t(sk[0])];
        bool inc1 = g.incident[size_t(m)][size_t(sk[1])];
        if (m != sk[0] && m != sk[1]) {
          if (inc0 && inc1) ++r.n_both;
          if (inc0 || inc1) ++r.n_either;
        }
        if (in_triple(m)) continue;
        if (!inc0 && !inc1) ++r.n_skew_both;
        if (g.incident[size_t(m)][size_t(apex)]) ++r.n_apex_incident;
        if (!inc0 && !inc1 && !g.incident[size_t(m)][size_t(apex)] && r.outside_skew < 0)
          r.outside_skew = m;
      }
      if (r.n_both != 5) fail("expected 5 weights incident to both skew members, got " + std::to_string(r.n_both));
      if (r.n_either != 15) fail("expected 15 weights incident to a skew member, got " + std::to_string(r.n_either));
      if (r.n_skew_both != 10) fail("expected 10 outside weights skew to both, got " + std::to_string(r.n_skew_both));
      if (r.n_apex_incident != 8)
        fail("expected 8 outside weights incident to the apex, got " + std::to_string(r.n_apex_incident));
      if (r.outside_skew < 0) fail("no outside weight skew to all three");
      break;
    }
    case 3: {
      r.crossing = 0;
      r.outside_low = -1;
      for (int m = 0; m < n; ++m) {
        if (in_triple(m)) continue;
        int c = int(g.incident[size_t(m)][size_t(i)]) + int(g.incident[size_t(m)][size_t(j)]) +
                int(g.incident[size_t(m)][size_t(k)]);
        r.crossing += c;
        if (c <= 1 && r.outside_low < 0) r.outside_low = m;
      }
      if (r.crossing != 24) fail("expected 24 triple-to-outside incidences, got " + std::to_string(r.crossing));
      if (r.outside_low < 0) fail("no outside weight incident to at most one of the triple");
      break;
    }
    default:
      fail("impossible incident pair count");
  }
  return r;
}

E6Certificate run_e6_cases(const IncidenceGraph& g, bool parallel) {
  E6Certificate cert;
  cert.graph = g;
  const int n = int(g.weights.size());
  WeightIndex idx{&g.weights};

  std::vector<std::array<int, 3>> triples;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) triples.push_back({i, j, k});
  cert.triples.resize(triples.size());

  if (parallel) {
#pragma omp parallel for schedule(dynamic, 64)
    for (size_t t = 0; t < triples.size(); ++t)
      cert.triples[t] = check_triple(g, idx, triples[t][0], triples[t][1], triples[t][2]);
  } else {
    for (size_t t = 0; t < triples.size(); ++t)
      cert.triples[t] = check_triple(g, idx, triples[t][0], triples[t][1], triples[t][2]);
  }

  bool triples_ok = true;
  for (const auto& r : cert.triples) {
    ++cert.case_counts[size_t(r.incident_count)];
    triples_ok = triples_ok && r.ok;
  }

  // One common eigenvalue is impossible: the differences span a rank-6
  // lattice, so the weights are not confined to a single affine hyperplane
  // of their span, let alone a point.
  std::vector<RatVec> diffs;
  for (int i = 0; i < n; ++i) diffs.push_back(vec_sub(g.weights[size_t(i)], g.weights[0]));
  cert.difference_rank = rational_rank(RatMatrix::from_rows(diffs));

  // Two eigenvalues would put all 27 vertices on two parallel supporting
  // hyperplanes; the largest facet caps how many each can hold.
  cert.hull = parallel ? hull_facets(g.weights) : hull_facets_serial(g.weights);
  cert.hull_summary = summarize_hull(cert.hull);

  cert.verified = g.checks.all() && triples_ok && long(cert.triples.size()) == 2925 &&
                  cert.difference_rank == 6 && cert.hull_summary.two_hyperplane_impossible;
  return cert;
}

}  // namespace

E6Certificate e6_case_checks(const IncidenceGraph& g) { return run_e6_cases(g, true); }

E6Certificate e6_case_checks_serial(const IncidenceGraph& g) { return run_e6_cases(g, false); }

HullSummary summarize_hull(const Polytope& p) {
  HullSummary s;
  s.facet_sizes = facet_size_histogram(p);
  s.vertex_count = p.points.size();
  for (const auto& [sz, count] : s.facet_sizes) s.max_facet_vertices = std::max(s.max_facet_vertices, sz);
  s.two_hyperplane_impossible = 2 * s.max_facet_vertices < s.vertex_count;
  return s;
}

E7Certificate e7_obstruction(const RootSystem& rs) {
  if (rs.type != TypeLabel::E || rs.rank != 7)
    throw std::invalid_argument("e7_obstruction: root system is not E7");
  E7Certificate cert;
  WeightSystem ws = weight_system(std::make_shared<RootSystem>(rs), {0, 0, 0, 0, 0, 0, 1});
  cert.weights = ws.weights;
  cert.weight_count_ok = cert.weights.size() == 56;
  // Self-dual module: the weight multiset is negation-closed, which is what
  // forces x^2 = -1 and a two-valued spectrum for any common point x.
  cert.self_dual = weights_negation_closed(cert.weights);
  cert.hull = hull_facets(cert.weights);
  cert.hull_summary = summarize_hull(cert.hull);
  cert.verified = cert.weight_count_ok && cert.self_dual && cert.hull_summary.two_hyperplane_impossible;
  return cert;
}

RootStringCertificate root_string_obstruction(const RootSystem& rs, const std::vector<long>& coeffs) {
  RootStringCertificate cert;
  cert.type = rs.type;
  cert.rank = rs.rank;
  cert.lambda_coeffs = coeffs;
  cert.lambda = weight_from_coeffs(rs, coeffs);
  if (!is_dominant(rs, cert.lambda)) throw std::invalid_argument("root_string_obstruction: weight not dominant");
  cert.s = string_length(rs, cert.lambda);
  if (cert.s < 2)
    throw std::invalid_argument("root_string_obstruction: string length " + std::to_string(cert.s) +
                                " carries no obstruction");

  cert.dual_highest = highest_root_dual(rs);
  // The root whose coroot is the dual highest root; it is short, and the
  // string lambda, lambda - root, lambda - 2 root lies inside the weight
  // system because <lambda, coroot> = s >= 2.
  cert.string_root = coroot(rs, cert.dual_highest);  // applying ^vee twice recovers the root
  cert.mid = vec_sub(cert.lambda, cert.string_root);
  cert.low = vec_sub(cert.mid, cert.string_root);
  cert.ap_identity = vec_add(cert.lambda, cert.low) == vec_scale(Rational(2), cert.mid);
  cert.string_root_is_root = is_root(rs, cert.string_root);

  Rational min_norm = pairing(rs, rs.positive_roots[0], rs.positive_roots[0]);
  for (const auto& b : rs.positive_roots) {
    Rational nn = pairing(rs, b, b);
    if (nn < min_norm) min_norm = nn;
  }
  cert.string_root_short = pairing(rs, cert.string_root, cert.string_root) == min_norm;

  cert.short_gen = short_roots_generate(rs);
  cert.dim_v = weyl_dim(rs, cert.lambda);

  cert.verified = cert.s >= 2 && cert.ap_identity && cert.string_root_is_root && cert.string_root_short &&
                  cert.short_gen.verified && cert.dim_v > 0;
  return cert;
}

}  // namespace gandg
