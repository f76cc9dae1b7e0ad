#pragma once

#include "phasespace/operator_poly.hpp"

#include <complex>
#include <map>
#include <string>

namespace phasespace {

/// Commutative polynomial on phase space: finite map (q-exponent, p-exponent)
/// -> HbarScalar with no stored zero, so the representation is canonical.
class PhasePoly {
 public:
  PhasePoly() = default;

  static PhasePoly zero() { return {}; }
  static PhasePoly one() { return monomial(0, 0); }
  static PhasePoly q(int power = 1) { return monomial(power, 0); }
  static PhasePoly p(int power = 1) { return monomial(0, power); }
  static PhasePoly monomial(int q_exp, int p_exp, HbarScalar coeff = HbarScalar(1));
  static PhasePoly scalar(HbarScalar s) { return monomial(0, 0, std::move(s)); }

  const std::map<Monomial, HbarScalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  HbarScalar coeff(int q_exp, int p_exp) const;
  int total_degree() const;

  /// True when every coefficient is hbar-free with zero imaginary part.
  bool is_real_classical() const;

  PhasePoly operator-() const;
  PhasePoly& operator+=(const PhasePoly& o);
  PhasePoly& operator-=(const PhasePoly& o);
  PhasePoly operator*(const PhasePoly& o) const;
  PhasePoly& operator*=(const PhasePoly& o) { return *this = *this * o; }

  friend PhasePoly operator+(PhasePoly a, const PhasePoly& b) { return a += b; }
  friend PhasePoly operator-(PhasePoly a, const PhasePoly& b) { return a -= b; }

  PhasePoly operator*(const HbarScalar& s) const;
  PhasePoly pow(unsigned e) const;

  bool operator==(const PhasePoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const PhasePoly& o) const { return !(*this == o); }

  PhasePoly d_dq() const;
  PhasePoly d_dp() const;

  /// Numeric evaluation with hbar substituted.
  std::complex<double> eval(double q, double p, double hbar) const;
  /// Evaluation of a poly known to be real-valued (asserts small imag part).
  double eval_real(double q, double p, double hbar) const;

  std::string str() const;

  void add_term(Monomial m, HbarScalar c);

 private:
  std::map<Monomial, HbarScalar> terms_;
};

std::ostream& operator<<(std::ostream& os, const PhasePoly& f);

/// Poisson bracket df/dq dg/dp - df/dp dg/dq.
PhasePoly poisson_bracket(const PhasePoly& f, const PhasePoly& g);

}  // namespace phasespace
