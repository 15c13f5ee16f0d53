#include <doctest.h>

#include <algorithm>

#include "gandg/obstruction.hpp"

using namespace gandg;

namespace {

RatVec rv(std::initializer_list<long> xs) {
  RatVec v;
  for (long x : xs) v.push_back(Rational(x));
  return v;
}

std::vector<RatVec> e6_weights() {
  return weight_system(TypeLabel::E, 6, {1, 0, 0, 0, 0, 0}).weights;
}

}  // namespace

TEST_CASE("e6 incidence structure") {
  auto g = e6_incidence(weight_system(TypeLabel::E, 6, {1, 0, 0, 0, 0, 0}));
  CHECK(g.weights.size() == 27);
  CHECK(g.checks.all());
  CHECK(g.checks.detail.empty());
  CHECK(g.incident_pairs.size() == 135);
  for (size_t i = 0; i < 27; ++i) {
    long deg = 0;
    CHECK_FALSE(g.incident[i][i]);
    for (size_t j = 0; j < 27; ++j) {
      if (g.incident[i][j]) ++deg;
      CHECK(g.incident[i][j] == g.incident[j][i]);
    }
    CHECK(deg == 10);
  }

  // The dual fundamental weight gives the dual graph; same invariants.
  auto gd = e6_incidence(weight_system(TypeLabel::E, 6, {0, 0, 0, 0, 0, 1}));
  CHECK(gd.checks.all());

  CHECK_THROWS_AS(e6_incidence(weight_system(TypeLabel::A, 3, {0, 1, 0})),
                  std::invalid_argument);
}

TEST_CASE("incidence checks name the broken invariant") {
  auto ws = e6_weights();
  CHECK(run_incidence_checks(ws).all());

  auto short_list = ws;
  short_list.pop_back();
  auto c1 = run_incidence_checks(short_list);
  CHECK_FALSE(c1.count_ok);
  CHECK_FALSE(c1.all());
  CHECK_FALSE(c1.detail.empty());

  auto dup = ws;
  dup[1] = dup[0];
  auto c2 = run_incidence_checks(dup);
  CHECK(c2.count_ok);
  CHECK_FALSE(c2.distinct);

  auto scaled = ws;
  for (auto& x : scaled[3]) x *= Rational(2);
  auto c3 = run_incidence_checks(scaled);
  CHECK_FALSE(c3.diag_ok);

  auto flipped = ws;
  for (auto& x : flipped[5]) x = -x;  // keeps the norm, breaks every pairing
  auto c4 = run_incidence_checks(flipped);
  CHECK(c4.diag_ok);
  CHECK_FALSE(c4.offdiag_ok);

  CHECK_THROWS_AS(incidence_graph(flipped), std::invalid_argument);
}

TEST_CASE("e6 case analysis") {
  auto g = e6_incidence(weight_system(TypeLabel::E, 6, {1, 0, 0, 0, 0, 0}));
  auto cert = e6_case_checks(g);

  CHECK(cert.verified);
  CHECK(cert.triples.size() == 2925);
  CHECK(cert.case_counts == std::array<long, 4>{720, 1080, 1080, 45});
  CHECK(cert.difference_rank == 6);
  CHECK(cert.hull_summary.facet_sizes == std::map<size_t, size_t>{{6, 72}, {10, 27}});
  CHECK(cert.hull_summary.max_facet_vertices == 10);
  CHECK(cert.hull_summary.vertex_count == 27);
  CHECK(cert.hull_summary.two_hyperplane_impossible);
  CHECK(cert.hull.affine_dim == 6);

  bool seen[4] = {false, false, false, false};
  for (const auto& t : cert.triples) {
    REQUIRE(t.ok);
    CHECK(t.detail.empty());
    REQUIRE(t.incident_count >= 0);
    REQUIRE(t.incident_count <= 3);
    seen[t.incident_count] = true;
    switch (t.incident_count) {
      case 0:
        CHECK(t.common >= 0);
        for (int s : t.sum_indices) CHECK(s >= 0);
        break;
      case 1:
        CHECK(t.fourth >= 0);
        break;
      case 2:
        CHECK(t.skew_pair[0] >= 0);
        CHECK(t.apex >= 0);
        CHECK(t.n_both == 5);
        CHECK(t.n_either == 15);
        CHECK(t.n_skew_both == 10);
        CHECK(t.n_apex_incident == 8);
        CHECK(t.outside_skew >= 0);
        break;
      case 3:
        CHECK(t.crossing == 24);
        CHECK(t.outside_low >= 0);
        break;
    }
  }
  CHECK((seen[0] && seen[1] && seen[2] && seen[3]));

  auto serial = e6_case_checks_serial(g);
  CHECK(serial.verified);
  CHECK(serial.case_counts == cert.case_counts);
  CHECK(serial.difference_rank == cert.difference_rank);
  CHECK(serial.hull_summary.facet_sizes == cert.hull_summary.facet_sizes);
  REQUIRE(serial.triples.size() == cert.triples.size());
  for (size_t i = 0; i < serial.triples.size(); ++i) {
    CHECK(serial.triples[i].triple == cert.triples[i].triple);
    CHECK(serial.triples[i].incident_count == cert.triples[i].incident_count);
  }
}

TEST_CASE("e7 hyperplane obstruction") {
  auto rs = build_root_system(TypeLabel::E, 7);
  auto cert = e7_obstruction(rs);
  CHECK(cert.weights.size() == 56);
  CHECK(cert.weight_count_ok);
  CHECK(cert.self_dual);
  CHECK(cert.hull.affine_dim == 7);
  CHECK(cert.hull_summary.facet_sizes == std::map<size_t, size_t>{{7, 576}, {12, 126}});
  CHECK(cert.hull_summary.max_facet_vertices == 12);
  CHECK(cert.hull_summary.vertex_count == 56);
  CHECK(cert.hull_summary.two_hyperplane_impossible);
  CHECK(cert.verified);
}

TEST_CASE("root string certificates") {
  auto a1 = root_string_obstruction(build_root_system(TypeLabel::A, 1), {2});
  CHECK(a1.verified);
  CHECK(a1.s == 2);
  CHECK(a1.dim_v == 3);
  CHECK(a1.lambda == rv({1, -1}));
  CHECK(a1.string_root == rv({1, -1}));
  CHECK(a1.mid == rv({0, 0}));
  CHECK(a1.low == rv({-1, 1}));
  CHECK(a1.ap_identity);
  CHECK(a1.string_root_is_root);
  CHECK(a1.string_root_short);
  CHECK(a1.short_gen.verified);
  CHECK(a1.short_gen.all_roots_short);

  auto a2 = root_string_obstruction(build_root_system(TypeLabel::A, 2), {1, 1});
  CHECK(a2.verified);
  CHECK(a2.s == 2);
  CHECK(a2.dim_v == 8);

  auto b3 = root_string_obstruction(build_root_system(TypeLabel::B, 3), {1, 0, 0});
  CHECK(b3.verified);
  CHECK(b3.s == 2);
  CHECK(b3.dim_v == 7);
  CHECK(b3.string_root == rv({1, 0, 0}));  // the short root realizes the string
  CHECK(b3.string_root_short);
  CHECK_FALSE(b3.short_gen.all_roots_short);

  auto c3 = root_string_obstruction(build_root_system(TypeLabel::C, 3), {0, 0, 1});
  CHECK(c3.verified);
  CHECK(c3.s == 2);
  CHECK(c3.dim_v == 14);
  CHECK(c3.string_root_short);

  auto e8 = root_string_obstruction(build_root_system(TypeLabel::E, 8),
                                    {0, 0, 0, 0, 0, 0, 0, 1});
  CHECK(e8.verified);
  CHECK(e8.s == 2);
  CHECK(e8.dim_v == 248);

  // Minuscule and zero weights have no string of length >= 2.
  CHECK_THROWS_AS(root_string_obstruction(build_root_system(TypeLabel::B, 3), {0, 0, 1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(root_string_obstruction(build_root_system(TypeLabel::B, 3), {0, 0, 0}),
                  std::invalid_argument);
}
