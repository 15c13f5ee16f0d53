#include <doctest.h>

#include <algorithm>
#include <random>

#include "gandg/hull.hpp"
#include "gandg/oracles.hpp"

using namespace gandg;

namespace {

RatVec rv(std::initializer_list<long> xs) {
  RatVec v;
  for (long x : xs) v.push_back(Rational(x));
  return v;
}

std::vector<RatVec> unit_square() {
  return {rv({0, 0}), rv({1, 0}), rv({0, 1}), rv({1, 1})};
}

bool same_facets(const Polytope& a, const Polytope& b) {
  if (a.facets.size() != b.facets.size()) return false;
  for (size_t i = 0; i < a.facets.size(); ++i) {
    if (a.facets[i].vertices != b.facets[i].vertices) return false;
    if (a.facets[i].normal != b.facets[i].normal) return false;
    if (a.facets[i].offset != b.facets[i].offset) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("unit square") {
  auto p = hull_facets(unit_square());
  CHECK(p.ambient_dim == 2);
  CHECK(p.affine_dim == 2);
  REQUIRE(p.facets.size() == 4);
  CHECK(facet_size_histogram(p) == std::map<size_t, size_t>{{2, 4}});
  for (const auto& f : p.facets) {
    // Primitive integer normals: each is +-e_1 or +-e_2 with offset 0 or 1.
    Rational len = dot(f.normal, f.normal);
    CHECK(len == Rational(1));
    CHECK((f.offset == Rational(0) || f.offset == Rational(1)));
  }
}

TEST_CASE("interior and facet-interior points") {
  auto pts = unit_square();
  pts.push_back(RatVec{Rational(1, 2), Rational(1, 2)});  // interior
  auto p = hull_facets(pts);
  CHECK(p.facets.size() == 4);
  for (const auto& f : p.facets)
    CHECK(std::find(f.vertices.begin(), f.vertices.end(), 4) == f.vertices.end());

  // A point in the relative interior of an edge joins that facet's equality
  // set but no other.
  pts = unit_square();
  pts.push_back(RatVec{Rational(1, 2), Rational(0)});
  auto q = hull_facets(pts);
  CHECK(q.facets.size() == 4);
  CHECK(facet_size_histogram(q) == std::map<size_t, size_t>{{2, 3}, {3, 1}});
}

TEST_CASE("cube and simplex and cross-polytope") {
  std::vector<RatVec> cube;
  for (long x = 0; x <= 1; ++x)
    for (long y = 0; y <= 1; ++y)
      for (long z = 0; z <= 1; ++z) cube.push_back(rv({x, y, z}));
  auto pc = hull_facets(cube);
  CHECK(pc.affine_dim == 3);
  CHECK(facet_size_histogram(pc) == std::map<size_t, size_t>{{4, 6}});

  auto ps = hull_facets({rv({0, 0, 0}), rv({1, 0, 0}), rv({0, 1, 0}), rv({0, 0, 1})});
  CHECK(facet_size_histogram(ps) == std::map<size_t, size_t>{{3, 4}});

  std::vector<RatVec> cross;
  for (int k = 0; k < 3; ++k)
    for (long s : {1L, -1L}) {
      RatVec v(3);
      v[size_t(k)] = Rational(s);
      cross.push_back(v);
    }
  auto px = hull_facets(cross);
  REQUIRE(px.facets.size() == 8);
  CHECK(facet_size_histogram(px) == std::map<size_t, size_t>{{3, 8}});
  for (const auto& f : px.facets) {
    CHECK(f.offset == Rational(1));
    CHECK(dot(f.normal, f.normal) == Rational(3));  // normals (+-1, +-1, +-1)
  }
}

TEST_CASE("lower-dimensional input in a bigger ambient space") {
  // A square embedded in the z = 5 plane of R^3.
  std::vector<RatVec> pts;
  for (const auto& p : unit_square()) {
    RatVec q = p;
    q.push_back(Rational(5));
    pts.push_back(q);
  }
  auto p = hull_facets(pts);
  CHECK(p.ambient_dim == 3);
  CHECK(p.affine_dim == 2);
  CHECK(p.facets.size() == 4);
  verify_polytope(p);
}

TEST_CASE("degenerate inputs are rejected") {
  CHECK_THROWS_AS(hull_facets({rv({0, 0}), rv({1, 1}), rv({2, 2})}), std::invalid_argument);
  CHECK_THROWS_AS(hull_facets({rv({0, 0})}), std::invalid_argument);
  CHECK_THROWS_AS(hull_facets({rv({0, 0}), rv({0, 0}), rv({1, 0})}), std::invalid_argument);
  CHECK_THROWS_AS(hull_facets({}), std::invalid_argument);
}

TEST_CASE("verify_polytope catches tampering") {
  auto p = hull_facets(unit_square());
  verify_polytope(p);

  auto bad = p;
  bad.facets[0].offset += Rational(1);  // no point reaches the hyperplane now
  CHECK_THROWS_AS(verify_polytope(bad), std::logic_error);

  auto bad2 = p;
  bad2.facets.pop_back();
  CHECK_THROWS_AS(verify_polytope(bad2), std::logic_error);

  auto bad3 = p;
  for (auto& x : bad3.facets[0].normal) x *= Rational(2);  // not primitive
  bad3.facets[0].offset *= Rational(2);
  CHECK_THROWS_AS(verify_polytope(bad3), std::logic_error);
}

TEST_CASE("serial and parallel walks agree") {
  std::vector<RatVec> cross;
  for (int k = 0; k < 4; ++k)
    for (long s : {1L, -1L}) {
      RatVec v(4);
      v[size_t(k)] = Rational(s);
      cross.push_back(v);
    }
  CHECK(same_facets(hull_facets(cross), hull_facets_serial(cross)));

  std::mt19937 gen(4242u);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<RatVec> pts;
    for (int i = 0; i < 9; ++i) {
      RatVec p(3);
      for (int k = 0; k < 3; ++k) p[size_t(k)] = Rational(long(gen() % 15) - 7, 1 + long(gen() % 2));
      pts.push_back(p);
    }
    std::sort(pts.begin(), pts.end(), &vec_lex_less);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 5) continue;
    Polytope par;
    try {
      par = hull_facets(pts);
    } catch (const std::invalid_argument&) {
      continue;  // the draw was affinely degenerate
    }
    auto ser = hull_facets_serial(pts);
    CHECK(same_facets(par, ser));
    CHECK(same_facets(par, hull_facets_bruteforce(pts)));
  }
}

TEST_CASE("oracle agrees on structured sets") {
  std::vector<RatVec> cross;
  for (int k = 0; k < 3; ++k)
    for (long s : {1L, -1L}) {
      RatVec v(3);
      v[size_t(k)] = Rational(s);
      cross.push_back(v);
    }
  CHECK(same_facets(hull_facets(cross), hull_facets_bruteforce(cross)));
  CHECK(same_facets(hull_facets_bruteforce(cross), hull_facets_bruteforce_serial(cross)));

  auto sq = unit_square();
  sq.push_back(RatVec{Rational(1, 2), Rational(1, 2)});
  CHECK(same_facets(hull_facets(sq), hull_facets_bruteforce(sq)));
}
