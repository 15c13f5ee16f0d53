#include "gandg/quotient_ring.hpp"

#include <stdexcept>
#include <utility>

#include "gandg/matrix.hpp"

namespace gandg {

QuotientRingElement::QuotientRingElement(QuotientModulus mod, std::vector<Rational> coeffs)
    : mod_(std::move(mod)), c_(std::move(coeffs)) {
  if (mod_.m < 1) throw std::invalid_argument("QuotientRingElement: modulus degree must be >= 1");
  if (mod_.c.is_zero()) throw std::invalid_argument("QuotientRingElement: modulus constant must be nonzero");
  if (long(c_.size()) > mod_.m) throw std::invalid_argument("QuotientRingElement: too many coefficients");
  c_.resize(size_t(mod_.m));
}

QuotientRingElement QuotientRingElement::zero(const QuotientModulus& mod) {
  return QuotientRingElement(mod, {});
}

QuotientRingElement QuotientRingElement::one(const QuotientModulus& mod) {
  return QuotientRingElement(mod, {Rational(1)});
}

QuotientRingElement QuotientRingElement::t(const QuotientModulus& mod) {
  if (mod.m == 1) return constant(mod, mod.c);  // t = c when t^1 = c
  return QuotientRingElement(mod, {Rational(0), Rational(1)});
}

QuotientRingElement QuotientRingElement::constant(const QuotientModulus& mod, const Rational& r) {
  return QuotientRingElement(mod, {r});
}

bool QuotientRingElement::is_zero() const {
  for (const auto& x : c_)
    if (!x.is_zero()) return false;
  return true;
}

bool QuotientRingElement::is_one() const {
  if (c_[0] != Rational(1)) return false;
  for (size_t k = 1; k < c_.size(); ++k)
    if (!c_[k].is_zero()) return false;
  return true;
}

QuotientRingElement& QuotientRingElement::operator+=(const QuotientRingElement& o) {
  if (mod_ != o.mod_) throw std::invalid_argument("QuotientRingElement: modulus mismatch");
  for (size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

QuotientRingElement& QuotientRingElement::operator-=(const QuotientRingElement& o) {
  if (mod_ != o.mod_) throw std::invalid_argument("QuotientRingElement: modulus mismatch");
  for (size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
  return *this;
}

QuotientRingElement& QuotientRingElement::operator*=(const QuotientRingElement& o) {
  if (mod_ != o.mod_) throw std::invalid_argument("QuotientRingElement: modulus mismatch");
  size_t m = size_t(mod_.m);
  // Convolve, then fold t^(m+k) = c * t^k; the product degree is < 2m - 1 so a
  // single fold suffices.
  std::vector<Rational> prod(2 * m, Rational(0));
  for (size_t i = 0; i < m; ++i) {
    if (c_[i].is_zero()) continue;
    for (size_t j = 0; j < m; ++j) {
      if (o.c_[j].is_zero()) continue;
      prod[i + j] += c_[i] * o.c_[j];
    }
  }
  for (size_t k = 0; k < m; ++k) {
    c_[k] = prod[k];
    c_[k] += mod_.c * prod[k + m];
  }
  return *this;
}

QuotientRingElement operator-(const QuotientRingElement& a) {
  QuotientRingElement r = a;
  for (auto& x : r.c_) x = -x;
  return r;
}

bool operator==(const QuotientRingElement& a, const QuotientRingElement& b) {
  if (a.mod_ != b.mod_) throw std::invalid_argument("QuotientRingElement: modulus mismatch");
  return a.c_ == b.c_;
}

QuotientRingElement QuotientRingElement::inverse() const {
  size_t m = size_t(mod_.m);
  // Column k of the multiplication matrix is (*this) * t^k.
  RatMatrix mat(static_cast<int>(m), static_cast<int>(m));
  QuotientRingElement col = *this;
  QuotientRingElement tt = t(mod_);
  for (size_t k = 0; k < m; ++k) {
    for (size_t i = 0; i < m; ++i) mat.at(int(i), int(k)) = col.c_[i];
    if (k + 1 < m) col *= tt;
  }
  RatVec e0(m);
  e0[0] = Rational(1);
  auto y = solve(mat, e0);
  if (!y) throw std::domain_error("QuotientRingElement::inverse: element is not invertible");
  QuotientRingElement inv(mod_, *y);
  if (!(inv * *this).is_one()) throw std::logic_error("QuotientRingElement::inverse: verification failed");
  return inv;
}

QuotientRingElement quotient_pow(const QuotientRingElement& x, long k) {
  QuotientRingElement base = k < 0 ? x.inverse() : x;
  unsigned long e = k < 0 ? static_cast<unsigned long>(-(k + 1)) + 1ul : static_cast<unsigned long>(k);
  QuotientRingElement acc = QuotientRingElement::one(x.modulus());
  while (e > 0) {
    if (e & 1ul) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

std::string QuotientRingElement::str() const {
  std::string s;
  for (size_t k = 0; k < c_.size(); ++k) {
    if (c_[k].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += c_[k].str();
    if (k >= 1) s += "*t";
    if (k >= 2) s += "^" + std::to_string(k);
  }
  return s.empty() ? "0" : s;
}

}  // namespace gandg
