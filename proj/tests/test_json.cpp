#include <doctest.h>

#include "gandg/json_io.hpp"

using namespace gandg;

TEST_CASE("scalar round trips") {
  Rational r(-7, 3);
  json d = rational_json(r);
  CHECK(d.is_string());
  CHECK(rational_from_json(d) == r);

  RatVec v{Rational(1, 2), Rational(0), Rational(-4)};
  CHECK(ratvec_from_json(ratvec_json(v)) == v);

  IntVec iv{mpz_class(12), mpz_class(-3), mpz_class("123456789012345678901234567890")};
  CHECK(intvec_from_json(intvec_json(iv)) == iv);

  GaussianRational g(Rational(1, 2), Rational(-3));
  CHECK(gaussian_from_json(gaussian_json(g)) == g);

  QuotientModulus mod{4, Rational(-1)};
  QuotientRingElement x(mod, {Rational(1), Rational(0), Rational(-5, 2), Rational(7)});
  auto back = ring_element_from_json(ring_element_json(x));
  CHECK(back == x);
  CHECK(back.modulus() == mod);
}

TEST_CASE("witness documents round trip byte for byte") {
  for (auto& w : {classical_minuscule_witness(TypeLabel::A, 3, {0, 1, 0}),
                  classical_minuscule_witness(TypeLabel::C, 2, {1, 0}),
                  classical_minuscule_witness(TypeLabel::B, 3, {0, 0, 1})}) {
    json d = witness_json(w);
    Witness parsed = witness_from_json(d);
    CHECK(parsed.verified());
    CHECK(witness_json(parsed) == d);
    CHECK(json::parse(d.dump()) == d);
  }
}

TEST_CASE("witness reverification accepts originals and rejects tampering") {
  json wedge = witness_json(classical_minuscule_witness(TypeLabel::A, 3, {0, 1, 0}));
  auto r1 = reverify_witness(wedge);
  CHECK(r1.ok);
  CHECK(r1.detail.empty());

  json torus = witness_json(classical_minuscule_witness(TypeLabel::C, 2, {1, 0}));
  CHECK(reverify_witness(torus).ok);

  // Flip the sign of one diagonal entry.
  json bad = torus;
  std::string im = bad["diag"][0]["im"].get<std::string>();
  bad["diag"][0]["im"] = (im[0] == '-') ? im.substr(1) : "-" + im;
  auto r2 = reverify_witness(bad);
  CHECK_FALSE(r2.ok);
  CHECK_FALSE(r2.detail.empty());

  // Stored check bits are recomputed, not believed.
  json lying = wedge;
  lying["checks"]["trace_zero"] = false;
  CHECK_FALSE(reverify_witness(lying).ok);

  // A corrupted weight changes the relation lattice.
  json badw = wedge;
  badw["weights"][0][0] = "9/1";
  CHECK_FALSE(reverify_witness(badw).ok);

  CHECK_FALSE(reverify_witness(json::object()).ok);
}

TEST_CASE("polytope round trip") {
  std::vector<RatVec> sq = {{Rational(0), Rational(0)},
                            {Rational(1), Rational(0)},
                            {Rational(0), Rational(1)},
                            {Rational(1), Rational(1)}};
  Polytope p = hull_facets(sq);
  json d = polytope_json(p);
  CHECK(polytope_json(polytope_from_json(d)) == d);
}

TEST_CASE("obstruction reverification, root string") {
  auto rs = build_root_system(TypeLabel::A, 1);
  ObstructionCertificate o;
  o.kind = ObstructionKind::root_string;
  o.root_string = root_string_obstruction(rs, {2});
  o.verified = o.root_string->verified;
  json d = obstruction_json(o);
  CHECK(reverify_obstruction(d).ok);

  json bad = d;
  bad["root_string"]["s"] = 3;
  auto r = reverify_obstruction(bad);
  CHECK_FALSE(r.ok);
  CHECK_FALSE(r.detail.empty());
}

TEST_CASE("obstruction reverification, e6") {
  Verdict v = classify(TypeLabel::E, 6, {1, 0, 0, 0, 0, 0});
  REQUIRE(v.obstruction.has_value());
  json d = obstruction_json(*v.obstruction);
  CHECK(reverify_obstruction(d).ok);

  json bad = d;
  bad["e6"]["weights"][0][0] = "5/3";
  CHECK_FALSE(reverify_obstruction(bad).ok);
}

TEST_CASE("verdict reverification") {
  Verdict w = classify(TypeLabel::A, 3, {0, 1, 0});
  json dw = verdict_json(w);
  CHECK(reverify_verdict(dw).ok);

  Verdict o = classify(TypeLabel::A, 1, {2});
  json doc = verdict_json(o);
  CHECK(reverify_verdict(doc).ok);

  json bad = doc;
  bad["minuscule"] = true;
  CHECK_FALSE(reverify_verdict(bad).ok);
}
