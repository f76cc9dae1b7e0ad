#pragma once

#include "phasespace/rational.hpp"

#include <complex>
#include <string>
#include <vector>

namespace phasespace {

/// Polynomial in the formal symbol hbar with complex-rational coefficients.
/// coeffs_[k] multiplies hbar^k; the top coefficient is nonzero unless the
/// whole scalar is zero (empty vector).
class HbarScalar {
 public:
  HbarScalar() = default;
  HbarScalar(CRational c);     // NOLINT(google-explicit-constructor)
  HbarScalar(Rational r);      // NOLINT(google-explicit-constructor)
  HbarScalar(std::int64_t n);  // NOLINT(google-explicit-constructor)

  /// c * hbar^power
  static HbarScalar hbar_term(CRational c, unsigned power);
  static HbarScalar hbar(unsigned power = 1) { return hbar_term(CRational(1), power); }
  static HbarScalar i() { return HbarScalar(CRational::i()); }

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree in hbar; -1 for the zero scalar.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  CRational coeff(unsigned power) const;
  const std::vector<CRational>& coeffs() const { return coeffs_; }

  /// True when every coefficient is real (no imaginary parts).
  bool is_real() const;
  /// True when the scalar is a plain complex rational (no hbar dependence).
  bool is_constant() const { return coeffs_.size() <= 1; }

  HbarScalar conj() const;
  HbarScalar operator-() const;

  HbarScalar& operator+=(const HbarScalar& o);
  HbarScalar& operator-=(const HbarScalar& o);
  HbarScalar& operator*=(const HbarScalar& o);

  friend HbarScalar operator+(HbarScalar a, const HbarScalar& b) { return a += b; }
  friend HbarScalar operator-(HbarScalar a, const HbarScalar& b) { return a -= b; }
  friend HbarScalar operator*(HbarScalar a, const HbarScalar& b) { return a *= b; }

  HbarScalar operator*(const CRational& s) const;
  HbarScalar operator*(const Rational& s) const { return *this * CRational(s); }
  HbarScalar operator/(const Rational& s) const { return *this * CRational(s.reciprocal()); }

  bool operator==(const HbarScalar& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const HbarScalar& o) const { return !(*this == o); }

  /// Exact division by (i hbar). Throws std::domain_error when the hbar^0
  /// coefficient is nonzero (the division would be inexact).
  HbarScalar div_i_hbar() const;

  std::complex<double> eval(double hbar) const;
  std::string str() const;

 private:
  void trim();
  std::vector<CRational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const HbarScalar& s);

}  // namespace phasespace
