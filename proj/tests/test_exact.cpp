#include <doctest.h>

#include <random>

#include "gandg/matrix.hpp"
#include "gandg/quotient_ring.hpp"
#include "gandg/rational.hpp"

using namespace gandg;

TEST_CASE("rational parse and canonical form") {
  CHECK(Rational::parse("3/6") == Rational(1, 2));
  CHECK(Rational::parse("-2/4").str() == "-1/2");
  CHECK(Rational::parse("7").str() == "7");
  CHECK(Rational::parse("0/5").str() == "0");
  CHECK(Rational(4, -6).str() == "-2/3");
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("rational arithmetic and extraction") {
  Rational a(2, 3), b(-1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK(a * b == Rational(-1, 9));
  CHECK(a / b == Rational(-4));
  CHECK_THROWS_AS(a / Rational(0), std::domain_error);
  CHECK(Rational(6, 3).to_long() == 2);
  CHECK_THROWS_AS(Rational(1, 2).to_long(), std::domain_error);
  CHECK(abs(Rational(-5, 7)) == Rational(5, 7));
  CHECK(Rational(1, 2) < Rational(2, 3));
}

TEST_CASE("gaussian rationals") {
  GaussianRational i = GaussianRational::i();
  CHECK((i * i) == GaussianRational(-1));
  GaussianRational z(Rational(2), Rational(3));
  GaussianRational w(Rational(1), Rational(-1));
  CHECK(z / w == GaussianRational(Rational(-1, 2), Rational(5, 2)));
  CHECK((z / w) * w == z);
  CHECK(z.pow(0).is_one());
  CHECK(z.pow(-3) * z.pow(3) == GaussianRational(1));
  CHECK(i.pow(4).is_one());
  CHECK_THROWS_AS(GaussianRational(0).pow(-1), std::domain_error);
  CHECK(z.conj().im() == Rational(-3));
  CHECK(z.norm_sq() == Rational(13));
}

TEST_CASE("quotient ring basics") {
  QuotientModulus gauss{2, Rational(-1)};  // t^2 = -1
  auto t = QuotientRingElement::t(gauss);
  CHECK(t * t == QuotientRingElement::constant(gauss, Rational(-1)));
  CHECK(t.inverse() == -t);
  CHECK(quotient_pow(t, -1) == -t);
  CHECK(quotient_pow(t, 4).is_one());

  QuotientModulus half{3, Rational(1, 2)};  // t^3 = 1/2
  auto u = QuotientRingElement::t(half);
  CHECK(quotient_pow(u, 3) == QuotientRingElement::constant(half, Rational(1, 2)));
  // t^-2 = 2t: multiply by t^2 to get 2 t^3 = 1.
  CHECK(quotient_pow(u, -2) == QuotientRingElement(half, {Rational(0), Rational(2), Rational(0)}));
  CHECK_THROWS_AS(QuotientRingElement::zero(half).inverse(), std::domain_error);
}

TEST_CASE("quotient ring axioms on seeded elements") {
  QuotientModulus mod{4, Rational(5, 3)};
  std::mt19937 gen(12345u);
  auto rand_elem = [&] {
    std::vector<Rational> c;
    for (int k = 0; k < 4; ++k) {
      long num = long(gen() % 11) - 5;
      long den = 1 + long(gen() % 3);
      c.push_back(Rational(num, den));
    }
    return QuotientRingElement(mod, c);
  };
  for (int trial = 0; trial < 25; ++trial) {
    auto a = rand_elem(), b = rand_elem(), c = rand_elem();
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a - a).is_zero());
    try {
      auto inv = a.inverse();
      CHECK((a * inv).is_one());
    } catch (const std::domain_error&) {
      // zero divisors exist; the modulus is not assumed irreducible
    }
  }
}

TEST_CASE("quotient ring modulus mismatch is an error") {
  QuotientModulus m1{2, Rational(-1)}, m2{2, Rational(1)};
  auto a = QuotientRingElement::t(m1);
  auto b = QuotientRingElement::t(m2);
  CHECK_THROWS_AS(a * b, std::invalid_argument);
  CHECK_THROWS_AS(a == b, std::invalid_argument);
}

TEST_CASE("hnf kernel frozen examples") {
  // Spin weights of B2, denominators cleared: rows (1,1,-1,-1), (1,-1,1,-1).
  auto k = hnf_kernel(IntMatrix::from_rows({{1, 1, -1, -1}, {1, -1, 1, -1}}));
  REQUIRE(k.size() == 2);
  CHECK(k[0] == IntVec{1, 0, 0, 1});
  CHECK(k[1] == IntVec{0, 1, 1, 0});

  CHECK(hnf_kernel(IntMatrix::from_rows({{1}})).empty());
  auto k2 = hnf_kernel(IntMatrix::from_rows({{1, 1}}));
  REQUIRE(k2.size() == 1);
  CHECK(k2[0] == IntVec{1, -1});
}

TEST_CASE("hnf kernel is a kernel and is canonical") {
  std::mt19937 gen(777u);
  for (int trial = 0; trial < 10; ++trial) {
    int rows = 2 + int(gen() % 3), cols = rows + 1 + int(gen() % 4);
    std::vector<IntVec> m(static_cast<size_t>(rows), IntVec(static_cast<size_t>(cols)));
    for (auto& r : m)
      for (auto& x : r) x = long(gen() % 9) - 4;
    auto a = IntMatrix::from_rows(m);
    auto k = hnf_kernel(a);
    for (const auto& v : k) {
      auto av = a.mul_vec(v);
      for (const auto& x : av) CHECK(x == 0);
    }
    // Recomputing gives the identical basis.
    CHECK(k == hnf_kernel(a));
  }
}

TEST_CASE("row hnf reduces above pivots") {
  auto h = row_hnf({{2, 4}, {0, 3}});
  REQUIRE(h.size() == 2);
  CHECK(h[0] == IntVec{2, 1});
  CHECK(h[1] == IntVec{0, 3});
  CHECK_THROWS_AS(row_hnf({{1, 2}, {2, 4}}), std::invalid_argument);
}

TEST_CASE("integer solve") {
  auto a = IntMatrix::from_rows({{2, 0}, {0, 3}});
  auto x = int_solve(a, {4, 9});
  REQUIRE(x.has_value());
  CHECK(*x == IntVec{2, 3});
  CHECK_FALSE(int_solve(a, {1, 0}).has_value());

  // Underdetermined with integer solutions.
  auto b = IntMatrix::from_rows({{1, 2, 3}});
  auto y = int_solve(b, {7});
  REQUIRE(y.has_value());
  CHECK(b.mul_vec(*y) == IntVec{7});
}

TEST_CASE("rational rank, solve, nullspace") {
  auto m = RatMatrix::from_rows({{Rational(1), Rational(2)}, {Rational(2), Rational(4)}});
  CHECK(rational_rank(m) == 1);

  auto s = solve(m, {Rational(3), Rational(6)});
  REQUIRE(s.has_value());
  CHECK(m.mul_vec(*s) == RatVec{Rational(3), Rational(6)});
  CHECK_FALSE(solve(m, {Rational(1), Rational(1)}).has_value());

  auto ns = nullspace(RatMatrix::from_rows({{Rational(1), Rational(1)}}));
  REQUIRE(ns.size() == 1);
  CHECK(ns[0] == RatVec{Rational(-1), Rational(1)});

  auto id = RatMatrix::from_rows({{Rational(1), Rational(0)}, {Rational(0), Rational(1)}});
  CHECK(nullspace(id).empty());
  CHECK(rational_rank(id) == 2);
}

TEST_CASE("lex order on vectors") {
  RatVec a{Rational(1), Rational(0)};
  RatVec b{Rational(1), Rational(1)};
  CHECK(vec_lex_less(a, b));
  CHECK(vec_lex_greater(b, a));
  CHECK_FALSE(vec_lex_less(a, a));
  CHECK_THROWS_AS(vec_lex_less(a, RatVec{Rational(1)}), std::invalid_argument);
}
