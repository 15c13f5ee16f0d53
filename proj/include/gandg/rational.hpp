#pragma once

// Exact scalar types. Everything downstream (root systems, witnesses, hulls)
// computes over these; there is no floating point anywhere in this project.

#include <gmpxx.h>

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace gandg {

// Arbitrary-precision rational, stored canonically: lowest terms, positive
// denominator. GMP maintains the canonical form; constructors enforce it for
// raw input.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(int n) : q_(n) {}
  Rational(long n) : q_(static_cast<signed long>(n)) {}
  Rational(const mpz_class& n) : q_(n) {}
  Rational(long num, long den) : q_(mpq_class(num, den)) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    q_.canonicalize();
  }
  Rational(const mpz_class& num, const mpz_class& den) : q_(mpq_class(num, den)) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    q_.canonicalize();
  }
  explicit Rational(mpq_class q) : q_(std::move(q)) {
    if (q_.get_den() == 0) throw std::invalid_argument("Rational: zero denominator");
    q_.canonicalize();
  }

  // Accepts "p", "-p", "p/q"; base 10 only.
  static Rational parse(const std::string& s);

  const mpz_class& num() const { return q_.get_num(); }
  const mpz_class& den() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  bool is_zero() const { return ::sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return ::sgn(q_); }

  // Integer extraction; both require is_integer().
  mpz_class to_mpz() const {
    if (!is_integer()) throw std::domain_error("Rational: not an integer: " + str());
    return q_.get_num();
  }
  long to_long() const {
    mpz_class z = to_mpz();
    if (!z.fits_slong_p()) throw std::domain_error("Rational: does not fit long");
    return z.get_si();
  }

  // "p/q" with q > 1, otherwise just "p".
  std::string str() const { return q_.get_str(); }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

 private:
  mpq_class q_;
};

inline Rational Rational::parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("Rational::parse: empty string");
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("Rational::parse: bad literal '" + s + "'");
  if (q.get_den() == 0) throw std::invalid_argument("Rational::parse: zero denominator in '" + s + "'");
  q.canonicalize();
  return Rational(std::move(q));
}

inline Rational abs(const Rational& a) { return a.sign() < 0 ? -a : a; }

using RatVec = std::vector<Rational>;

inline Rational dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  Rational s;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline RatVec vec_add(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vec_add: size mismatch");
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline RatVec vec_sub(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vec_sub: size mismatch");
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline RatVec vec_neg(const RatVec& a) {
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

inline RatVec vec_scale(const Rational& c, const RatVec& a) {
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

inline bool is_zero_vec(const RatVec& a) {
  for (const auto& x : a)
    if (!x.is_zero()) return false;
  return true;
}

// Strict lexicographic order; the canonical weight order is lex-descending,
// i.e. sorted with vec_lex_greater.
inline bool vec_lex_less(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vec_lex_less: size mismatch");
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

inline bool vec_lex_greater(const RatVec& a, const RatVec& b) { return vec_lex_less(b, a); }

inline std::string vec_str(const RatVec& a) {
  std::string s = "(";
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) s += ", ";
    s += a[i].str();
  }
  return s + ")";
}

// Element of Q(i). Division is exact via the conjugate.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}
  GaussianRational(int n) : re_(n) {}

  static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_one() const { return re_ == Rational(1) && im_.is_zero(); }

  GaussianRational conj() const { return GaussianRational(re_, -im_); }
  Rational norm_sq() const { return re_ * re_ + im_ * im_; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational m = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(m);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o) {
    Rational n = o.norm_sq();
    if (n.is_zero()) throw std::domain_error("GaussianRational: division by zero");
    *this *= o.conj();
    re_ /= n;
    im_ /= n;
    return *this;
  }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend GaussianRational operator-(const GaussianRational& a) { return GaussianRational(-a.re_, -a.im_); }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  // Integer exponent; negative exponents use the exact inverse.
  GaussianRational pow(long k) const {
    GaussianRational base = *this;
    if (k < 0) {
      base = GaussianRational(1) / base;
      k = -k;
    }
    GaussianRational acc(1);
    while (k > 0) {
      if (k & 1) acc *= base;
      base *= base;
      k >>= 1;
    }
    return acc;
  }

  std::string str() const { return re_.str() + (im_.sign() < 0 ? "" : "+") + im_.str() + "i"; }

 private:
  Rational re_{0};
  Rational im_{0};
};

}  // namespace gandg
