#pragma once

// Obstruction certificates: machine-checked records showing the group and
// its algebra cannot meet on the given module.
//
//   root_string       non-minuscule weights: the maximal root string has
//                     length >= 2, which pins three eigenvalues into a
//                     geometric progression and forces any common point to be
//                     an invertible scalar; scalars have nonzero trace while
//                     the algebra is trace-free.
//   e6_case_analysis  the 27-weight system: incidence structure and a
//                     four-way case split over every weight triple, plus the
//                     rank and convex-hull bounds that kill one- and
//                     two-valued spectra.
//   e7_hyperplane     the 56-weight system: self-duality forces eigenvalues
//                     +-i, and no two parallel supporting hyperplanes cover
//                     all 56 vertices.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gandg/hull.hpp"
#include "gandg/root_system.hpp"

namespace gandg {

struct IncidenceChecks {
  bool count_ok = false;     // exactly 27 weights
  bool distinct = false;     // pairwise distinct
  bool diag_ok = false;      // every <w, w> = 4/3
  bool offdiag_ok = false;   // every <w, w'> in {1/3, -2/3}
  bool degree_ok = false;    // every weight incident (-2/3) to exactly 10 others
  long incident_pair_count = -1;  // 135 when correct
  std::string detail;        // first failure, human-readable; empty when clean

  bool all() const {
    return count_ok && distinct && diag_ok && offdiag_ok && degree_ok && incident_pair_count == 135;
  }
};

// Granular and non-throwing, so corrupted inputs report which invariant broke.
IncidenceChecks run_incidence_checks(const std::vector<RatVec>& weights);

struct IncidenceGraph {
  std::vector<RatVec> weights;              // lex-descending
  std::vector<std::vector<bool>> incident;  // symmetric, irreflexive
  std::vector<std::pair<int, int>> incident_pairs;  // i < j, lex order
  IncidenceChecks checks;
};

// Builds the graph from raw weight vectors, throwing when any incidence
// invariant fails. Used both for freshly computed systems and for re-checking
// weights embedded in a serialized certificate.
IncidenceGraph incidence_graph(std::vector<RatVec> weights);

// Same, from a minuscule weight system of E6 (either fundamental weight
// works; the two are dual).
IncidenceGraph e6_incidence(const WeightSystem& ws);

// One record per weight triple. `incident_count` is the number of incident
// pairs among the three (the case discriminator); the remaining fields are
// the facts recorded for that case, -1 where not applicable.
struct TripleRecord {
  std::array<int, 3> triple{-1, -1, -1};
  int incident_count = -1;
  bool ok = false;
  std::string detail;

  // incident_count == 0: a weight incident to all three whose negated sums land in the system
  int common = -1;
  std::array<int, 3> sum_indices{-1, -1, -1};
  // incident_count == 1: index of w_a + w_b - w_c (a,b the incident pair)
  int fourth = -1;
  // incident_count == 2
  std::array<int, 2> skew_pair{-1, -1};
  int apex = -1;
  long n_both = -1;           // incident to both skew members: 5
  long n_either = -1;         // incident to at least one: 15
  long n_skew_both = -1;      // outside the triple, skew to both: 10
  long n_apex_incident = -1;  // outside the triple, incident to the apex: 8
  int outside_skew = -1;      // outside weight skew to all three
  // incident_count == 3
  long crossing = -1;  // incidences between the triple and the outside: 24
  int outside_low = -1;  // outside weight incident to at most one of the three
};

struct HullSummary {
  std::map<size_t, size_t> facet_sizes;
  size_t max_facet_vertices = 0;
  size_t vertex_count = 0;
  bool two_hyperplane_impossible = false;  // 2 * max_facet_vertices < vertex_count
};

HullSummary summarize_hull(const Polytope& p);

struct E6Certificate {
  IncidenceGraph graph;
  std::vector<TripleRecord> triples;  // all C(27,3) in lex order
  std::array<long, 4> case_counts{0, 0, 0, 0};
  long difference_rank = -1;  // rank of {w_i - w_0}: 6
  Polytope hull;
  HullSummary hull_summary;
  bool verified = false;
};

// Runs every case check; `verified` requires all triples to pass, the
// difference rank to be 6, and the hull to rule out two-valued spectra.
E6Certificate e6_case_checks(const IncidenceGraph& g);         // triples checked in parallel
E6Certificate e6_case_checks_serial(const IncidenceGraph& g);

struct E7Certificate {
  std::vector<RatVec> weights;  // 56, lex-descending
  bool weight_count_ok = false;
  bool self_dual = false;  // closed under negation
  Polytope hull;
  HullSummary hull_summary;
  bool verified = false;
};

E7Certificate e7_obstruction(const RootSystem& rs);

struct RootStringCertificate {
  TypeLabel type = TypeLabel::A;
  int rank = 0;
  std::vector<long> lambda_coeffs;
  RatVec lambda;
  long s = 0;               // <lambda, dual highest root>, the maximal string length
  RatVec dual_highest;      // highest root of the dual system
  RatVec string_root;       // the (short) root whose coroot realizes s
  RatVec mid, low;          // lambda - root, lambda - 2 root
  bool ap_identity = false;          // lambda + low = 2 mid
  bool string_root_is_root = false;
  bool string_root_short = false;
  ShortRootCertificate short_gen;    // simple roots from short roots
  mpz_class dim_v;                   // Weyl dimension of V(lambda)
  bool verified = false;
};

// Requires string length >= 2 (throws std::invalid_argument otherwise, since
// minuscule and zero weights have no root-string obstruction).
RootStringCertificate root_string_obstruction(const RootSystem& rs, const std::vector<long>& coeffs);

enum class ObstructionKind { root_string, e6_case_analysis, e7_hyperplane };

struct ObstructionCertificate {
  ObstructionKind kind = ObstructionKind::root_string;
  bool verified = false;
  std::optional<RootStringCertificate> root_string;
  std::optional<E6Certificate> e6;
  std::optional<E7Certificate> e7;
};

}  // namespace gandg
