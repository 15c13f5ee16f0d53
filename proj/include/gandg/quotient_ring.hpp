#pragma once

// Arithmetic in Q[t]/(t^m - c). The modulus is not assumed irreducible: every
// identity verified here holds simultaneously for all roots of t^m - c, which
// is exactly what the witness constructions need.

#include <string>
#include <vector>

#include "gandg/rational.hpp"

namespace gandg {

struct QuotientModulus {
  long m = 1;
  Rational c;

  friend bool operator==(const QuotientModulus& a, const QuotientModulus& b) {
    return a.m == b.m && a.c == b.c;
  }
  friend bool operator!=(const QuotientModulus& a, const QuotientModulus& b) { return !(a == b); }
};

class QuotientRingElement {
 public:
  QuotientRingElement(QuotientModulus mod, std::vector<Rational> coeffs);

  static QuotientRingElement zero(const QuotientModulus& mod);
  static QuotientRingElement one(const QuotientModulus& mod);
  static QuotientRingElement t(const QuotientModulus& mod);
  static QuotientRingElement constant(const QuotientModulus& mod, const Rational& r);

  const QuotientModulus& modulus() const { return mod_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;

  QuotientRingElement& operator+=(const QuotientRingElement& o);
  QuotientRingElement& operator-=(const QuotientRingElement& o);
  QuotientRingElement& operator*=(const QuotientRingElement& o);

  friend QuotientRingElement operator+(QuotientRingElement a, const QuotientRingElement& b) { return a += b; }
  friend QuotientRingElement operator-(QuotientRingElement a, const QuotientRingElement& b) { return a -= b; }
  friend QuotientRingElement operator*(QuotientRingElement a, const QuotientRingElement& b) { return a *= b; }
  friend QuotientRingElement operator-(const QuotientRingElement& a);

  // Equality requires matching moduli; comparing across rings is a bug.
  friend bool operator==(const QuotientRingElement& a, const QuotientRingElement& b);
  friend bool operator!=(const QuotientRingElement& a, const QuotientRingElement& b) { return !(a == b); }

  // Solves (multiplication-by-*this) y = 1; throws std::domain_error when the
  // element is a zero divisor or zero.
  QuotientRingElement inverse() const;

  std::string str() const;

 private:
  QuotientModulus mod_;
  std::vector<Rational> c_;  // size m, coefficient of t^k at index k
};

// x^k with k any integer; negative exponents go through inverse().
QuotientRingElement quotient_pow(const QuotientRingElement& x, long k);

}  // namespace gandg
