#include "phasespace/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace phasespace {

Rational::Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
  if (den_ == 0) throw std::domain_error("Rational: zero denominator");
  normalize();
}

void Rational::normalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  BigInt g = boost::multiprecision::gcd(boost::multiprecision::abs(num_), den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  num_ = num_ * o.den_ - o.num_ * den_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw std::domain_error("Rational: division by zero");
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

Rational Rational::reciprocal() const {
  if (num_ == 0) throw std::domain_error("Rational: reciprocal of zero");
  return Rational(den_, num_);
}

double Rational::to_double() const {
  // Exact for desk-scale values; falls back to long division semantics of cpp_int.
  return static_cast<double>(boost::multiprecision::cpp_rational(num_, den_));
}

std::string Rational::str() const {
  std::string s = num_.str();
  if (den_ != 1) {
    s += "/";
    s += den_.str();
  }
  return s;
}

Rational Rational::factorial(unsigned n) {
  BigInt f = 1;
  for (unsigned k = 2; k <= n; ++k) f *= k;
  return Rational(f);
}

Rational Rational::binomial(unsigned n, unsigned k) {
  if (k > n) return Rational(0);
  if (k > n - k) k = n - k;
  BigInt num = 1, den = 1;
  for (unsigned j = 0; j < k; ++j) {
    num *= (n - j);
    den *= (j + 1);
  }
  return Rational(num, den);
}

Rational Rational::falling_factorial(unsigned n, unsigned k) {
  if (k > n) return Rational(0);
  BigInt f = 1;
  for (unsigned j = 0; j < k; ++j) f *= (n - j);
  return Rational(f);
}

Rational Rational::pow2(int e) {
  BigInt p = BigInt(1) << static_cast<unsigned>(e < 0 ? -e : e);
  return e >= 0 ? Rational(p) : Rational(BigInt(1), p);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

CRational& CRational::operator+=(const CRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

CRational& CRational::operator-=(const CRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

CRational& CRational::operator*=(const CRational& o) {
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string CRational::str() const {
  if (im_.is_zero()) return re_.str();
  if (re_.is_zero()) return im_.str() + "i";
  std::string s = "(" + re_.str();
  s += im_.is_negative() ? " - " : " + ";
  s += im_.abs().str() + "i)";
  return s;
}

std::ostream& operator<<(std::ostream& os, const CRational& c) { return os << c.str(); }

}  // namespace phasespace
