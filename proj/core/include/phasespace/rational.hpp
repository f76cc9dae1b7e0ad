#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace phasespace {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational with arbitrary-precision integer parts.
/// Invariants: denominator > 0, gcd(|num|, den) == 1, zero is 0/1.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(BigInt n) : num_(std::move(n)), den_(1) {}
  Rational(BigInt n, BigInt d);

  static Rational of(std::int64_t n, std::int64_t d) { return Rational(BigInt(n), BigInt(d)); }

  const BigInt& numerator() const { return num_; }
  const BigInt& denominator() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_negative() const { return num_ < 0; }
  bool is_one() const { return num_ == 1 && den_ == 1; }
  bool is_integer() const { return den_ == 1; }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);  // throws std::domain_error on zero divisor

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const { return num_ * o.den_ < o.num_ * den_; }

  Rational reciprocal() const;
  Rational abs() const { return num_ < 0 ? -*this : *this; }

  double to_double() const;
  /// "n" for integers, "n/d" otherwise.
  std::string str() const;

  static Rational factorial(unsigned n);
  static Rational binomial(unsigned n, unsigned k);
  /// n! / (n-k)! = n (n-1) ... (n-k+1)
  static Rational falling_factorial(unsigned n, unsigned k);
  static Rational pow2(int e);  // 2^e, e may be negative

 private:
  void normalize();
  BigInt num_;
  BigInt den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Complex number with exact rational real and imaginary parts.
class CRational {
 public:
  CRational() = default;
  CRational(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  CRational(std::int64_t re) : re_(re) {}         // NOLINT(google-explicit-constructor)
  CRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static CRational i() { return CRational(Rational(0), Rational(1)); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  CRational conj() const { return CRational(re_, -im_); }
  CRational operator-() const { return CRational(-re_, -im_); }

  CRational& operator+=(const CRational& o);
  CRational& operator-=(const CRational& o);
  CRational& operator*=(const CRational& o);

  friend CRational operator+(CRational a, const CRational& b) { return a += b; }
  friend CRational operator-(CRational a, const CRational& b) { return a -= b; }
  friend CRational operator*(CRational a, const CRational& b) { return a *= b; }

  CRational operator*(const Rational& s) const { return CRational(re_ * s, im_ * s); }
  CRational operator/(const Rational& s) const { return CRational(re_ / s, im_ / s); }

  bool operator==(const CRational& o) const { return re_ == o.re_ && im_ == o.im_; }
  bool operator!=(const CRational& o) const { return !(*this == o); }

  std::complex<double> to_complex() const { return {re_.to_double(), im_.to_double()}; }
  std::string str() const;

 private:
  Rational re_;
  Rational im_;
};

std::ostream& operator<<(std::ostream& os, const CRational& c);

}  // namespace phasespace
