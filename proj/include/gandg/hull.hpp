#pragma once

// Exact convex hull facet enumeration by gift wrapping: find one supporting
// hyperplane by rotation, then walk the facet graph across ridges. All
// pivots are exact rational min-ratio computations; no epsilons exist. Facet
// sets are canonical (primitive integer normals, sorted vertex sets, facets
// sorted by vertex set) so independent runs and thread counts agree byte for
// byte.

#include <map>
#include <vector>

#include "gandg/rational.hpp"

namespace gandg {

struct Facet {
  RatVec normal;              // primitive integer vector, ambient coordinates
  Rational offset;            // normal . p <= offset for every input point
  std::vector<int> vertices;  // sorted indices into the input point list
};

struct Polytope {
  std::vector<RatVec> points;  // the input, in input order
  int ambient_dim = 0;
  int affine_dim = 0;
  std::vector<Facet> facets;  // sorted by vertex set
};

// Facets of conv(points). Points must be distinct and affinely span at least
// two dimensions. Non-extreme points are allowed: an interior point appears
// in no facet's vertex list, and a boundary point appears in the vertex list
// of every facet whose hyperplane contains it. "vertices" is the full
// equality set of the facet inequality, not just the extreme points.
Polytope hull_facets(const std::vector<RatVec>& points);         // OpenMP frontier expansion
Polytope hull_facets_serial(const std::vector<RatVec>& points);  // reference loop, same output

// Re-checks every Polytope invariant from scratch: facet inequalities hold
// for every point with equality exactly on the vertex set, normals are
// primitive and nonzero, every facet has affine dimension affine_dim - 1,
// the facet list is sorted and duplicate-free, and the list is closed (each
// ridge lies in exactly two facets, so no facet is missing). Throws
// std::logic_error with the first failure.
void verify_polytope(const Polytope& p);         // facet scan in parallel
void verify_polytope_serial(const Polytope& p);

// Vertex-count histogram: facet size -> number of facets.
std::map<size_t, size_t> facet_size_histogram(const Polytope& p);

}  // namespace gandg
