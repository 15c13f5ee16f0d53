#include <doctest.h>

#include <algorithm>

#include "gandg/witness.hpp"

using namespace gandg;

namespace {

std::vector<long> fw(int rank, int idx1) {
  std::vector<long> c(size_t(rank), 0);
  c[size_t(idx1 - 1)] = 1;
  return c;
}

}  // namespace

TEST_CASE("wedge witnesses verify for all small parameters") {
  for (long m = 2; m <= 5; ++m)
    for (long j = 1; j < m; ++j) {
      auto w = slm_wedge_witness(m, j);
      CHECK(w.verified());
      CHECK(w.entrywise_equal);
      CHECK(w.trace_zero);
      CHECK(w.relations_ok);
      CHECK(w.weights.size() > 0);
      CHECK(w.modulus.c == Rational(j, j - m));
    }
  CHECK_THROWS_AS(slm_wedge_witness(3, 0), std::invalid_argument);
  CHECK_THROWS_AS(slm_wedge_witness(3, 3), std::invalid_argument);
  CHECK_THROWS_AS(slm_wedge_witness(1, 1), std::invalid_argument);
}

TEST_CASE("wedge weights are the weight system") {
  auto w = slm_wedge_witness(4, 2);
  auto ws = weight_system(TypeLabel::A, 3, fw(3, 2));
  auto sorted = w.weights;
  std::sort(sorted.begin(), sorted.end(), &vec_lex_greater);
  CHECK(sorted == ws.weights);
}

TEST_CASE("frozen pm-one vectors") {
  CHECK(pm_one_vector(weight_system(TypeLabel::C, 2, fw(2, 1))) == RatVec{Rational(1), Rational(1)});
  CHECK(pm_one_vector(weight_system(TypeLabel::B, 2, fw(2, 2))) == RatVec{Rational(2), Rational(0)});
  CHECK(pm_one_vector(weight_system(TypeLabel::D, 4, fw(4, 1))) ==
        RatVec{Rational(1), Rational(1), Rational(1), Rational(1)});
  CHECK(pm_one_vector(weight_system(TypeLabel::D, 4, fw(4, 4))) ==
        RatVec{Rational(2), Rational(0), Rational(0), Rational(0)});
}

TEST_CASE("pm-one vectors pair to +-1 on every weight") {
  const std::pair<TypeLabel, int> specs[] = {{TypeLabel::B, 4}, {TypeLabel::C, 4}, {TypeLabel::D, 5}};
  for (auto spec : specs) {
    int r = spec.second;
    int widx = spec.first == TypeLabel::B ? r : (spec.first == TypeLabel::C ? 1 : r);
    auto ws = weight_system(spec.first, r, fw(r, widx));
    auto v = pm_one_vector(ws);
    for (const auto& w : ws.weights) {
      Rational p = dot(w, v);
      CHECK((p == Rational(1) || p == Rational(-1)));
    }
  }
}

TEST_CASE("torus witnesses verify") {
  auto ws = weight_system(TypeLabel::B, 3, fw(3, 3));
  auto w = pm_i_torus_witness(ws, pm_one_vector(ws));
  CHECK(w.verified());
  CHECK(w.kind == WitnessKind::torus_pm_i);
  for (const auto& d : w.group_diag_g) CHECK((d * d + GaussianRational(1)).is_zero());

  // A vector pairing to something other than +-1 is rejected.
  CHECK_THROWS_AS(pm_i_torus_witness(ws, RatVec{Rational(1), Rational(0), Rational(0)}),
                  std::invalid_argument);
}

TEST_CASE("classical dispatch") {
  CHECK(classical_minuscule_witness(TypeLabel::A, 3, fw(3, 2)).kind == WitnessKind::wedge);
  CHECK(classical_minuscule_witness(TypeLabel::B, 2, fw(2, 2)).kind == WitnessKind::torus_pm_i);
  CHECK(classical_minuscule_witness(TypeLabel::C, 3, fw(3, 1)).verified());
  CHECK(classical_minuscule_witness(TypeLabel::D, 4, fw(4, 4)).verified());
  CHECK_THROWS_AS(classical_minuscule_witness(TypeLabel::A, 3, {1, 1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(classical_minuscule_witness(TypeLabel::E, 6, fw(6, 1)), std::domain_error);
  // G2 has no minuscule weight, so the minuscule gate fires first.
  CHECK_THROWS_AS(classical_minuscule_witness(TypeLabel::G, 2, fw(2, 1)), std::invalid_argument);
}

TEST_CASE("recheck catches tampering") {
  auto w = slm_wedge_witness(4, 1);
  CHECK(w.verified());

  auto tampered = w;
  tampered.group_diag_q[0] = tampered.group_diag_q[0] + QuotientRingElement::one(tampered.modulus);
  recheck_witness(tampered);
  CHECK_FALSE(tampered.verified());

  auto missing = w;
  missing.relations.pop_back();
  recheck_witness(missing);
  CHECK_FALSE(missing.relations_ok);

  auto torus = classical_minuscule_witness(TypeLabel::C, 2, fw(2, 1));
  auto bad = torus;
  bad.group_diag_g[0] = GaussianRational(1);  // not +-i
  CHECK_THROWS_AS(recheck_witness(bad), std::invalid_argument);
}

TEST_CASE("equal sum quadruples, frozen small case") {
  auto ws = weight_system(TypeLabel::C, 2, fw(2, 1));
  auto quads = equal_sum_quadruples(ws.weights, 1000, 1u);
  REQUIRE(quads.size() == 1);
  std::array<int, 4> expected{0, 3, 1, 2};
  CHECK(quads[0] == expected);

  auto w = classical_minuscule_witness(TypeLabel::C, 2, fw(2, 1));
  CHECK(quadrangle_holds(w.weights, w.group_diag_g, quads[0]));
  CHECK_THROWS_AS(quadrangle_holds(w.weights, w.group_diag_g, std::array<int, 4>{0, 1, 2, 3}),
                  std::invalid_argument);
}

TEST_CASE("equal sum quadruples sampling is deterministic") {
  auto ws = weight_system(TypeLabel::B, 4, fw(4, 4));  // 16 weights
  auto all = equal_sum_quadruples(ws.weights, 1'000'000, 9u);
  auto sampled = equal_sum_quadruples(ws.weights, 10, 9u);
  CHECK(sampled.size() == 10);
  CHECK(equal_sum_quadruples(ws.weights, 10, 9u) == sampled);
  for (const auto& q : sampled)
    CHECK(vec_add(ws.weights[size_t(q[0])], ws.weights[size_t(q[1])]) ==
          vec_add(ws.weights[size_t(q[2])], ws.weights[size_t(q[3])]));
  CHECK(all.size() > 10);
}

TEST_CASE("negation closure") {
  CHECK(weights_negation_closed(weight_system(TypeLabel::C, 3, fw(3, 1)).weights));
  CHECK(weights_negation_closed(weight_system(TypeLabel::B, 3, fw(3, 3)).weights));
  // Half-spin of D5 is not self-dual.
  CHECK_FALSE(weights_negation_closed(weight_system(TypeLabel::D, 5, fw(5, 5)).weights));
}
