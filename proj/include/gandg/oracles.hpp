#pragma once

// Independent oracles. Both recompute answers by a route disjoint from the
// implementation they are used to check: the hull oracle enumerates point
// subsets and never touches the gift-wrapping walk, and the sign oracle
// scans all +-1 patterns and never touches the witness search. They exist so
// tests and verify-all can compare two derivations of the same object.

#include <vector>

#include "gandg/hull.hpp"
#include "gandg/root_system.hpp"

namespace gandg {

// Every facet as the equality set of a supporting hyperplane spanned by an
// affinely independent d-subset of the points. Output is canonical in the
// same convention as hull_facets (primitive integer normals, sorted vertex
// sets, facets sorted by vertex set) so the two are directly comparable.
// Guarded by a subset-count cap; this is a checking tool, not an algorithm.
Polytope hull_facets_bruteforce(const std::vector<RatVec>& points);         // OpenMP subset scan
Polytope hull_facets_bruteforce_serial(const std::vector<RatVec>& points);  // same, single thread

// All sign patterns (eps_1, ..., eps_n), eps in {+1, -1}, realizable as
// eps_j = <w_j, v> for some vector v. Realizability is decided by
// orthogonality against the kernel of the weight matrix and re-checked by an
// exact solve for every accepted pattern. Patterns are returned in the order
// of the bitmask enumeration (bit j set means eps_j = -1). n is capped at 20.
std::vector<std::vector<int>> pm_one_patterns(const WeightSystem& ws);
std::vector<std::vector<int>> pm_one_patterns_serial(const WeightSystem& ws);

}  // namespace gandg
