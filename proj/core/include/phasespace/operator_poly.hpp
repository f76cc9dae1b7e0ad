#pragma once

#include "phasespace/hbar_scalar.hpp"

#include <complex>
#include <map>
#include <string>
#include <vector>

namespace phasespace {

/// Exponent pair of a normal-ordered word q^a p^b (or a commutative monomial
/// q^a p^b on phase space).
struct Monomial {
  int q = 0;
  int p = 0;
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  int total_degree() const { return q + p; }
};

/// Dense column-major-free complex matrix, just big enough for the
/// truncated-basis oracle.
class ComplexMatrix {
 public:
  explicit ComplexMatrix(int dim) : dim_(dim), a_(static_cast<std::size_t>(dim) * dim) {}

  int dim() const { return dim_; }
  std::complex<double>& at(int r, int c) { return a_[static_cast<std::size_t>(r) * dim_ + c]; }
  const std::complex<double>& at(int r, int c) const {
    return a_[static_cast<std::size_t>(r) * dim_ + c];
  }

  ComplexMatrix operator*(const ComplexMatrix& o) const;
  ComplexMatrix& operator+=(const ComplexMatrix& o);
  ComplexMatrix& scale(std::complex<double> s);

  /// max |this - o| over the leading block x block square.
  double max_abs_diff(const ComplexMatrix& o, int block) const;

 private:
  int dim_;
  std::vector<std::complex<double>> a_;
};

/// Element of the algebra generated by q, p with [q, p] = i hbar, stored in
/// normal order (every q factor left of every p factor). The map holds no
/// zero scalars, so structural equality is mathematical equality.
class OperatorPoly {
 public:
  OperatorPoly() = default;

  static OperatorPoly zero() { return {}; }
  static OperatorPoly one() { return word(0, 0); }
  static OperatorPoly q(int power = 1) { return word(power, 0); }
  static OperatorPoly p(int power = 1) { return word(0, power); }
  static OperatorPoly word(int q_exp, int p_exp, HbarScalar coeff = HbarScalar(1));
  static OperatorPoly scalar(HbarScalar s) { return word(0, 0, std::move(s)); }

  const std::map<Monomial, HbarScalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  HbarScalar coeff(int q_exp, int p_exp) const;

  /// Max of a+b over stored words; -1 when zero.
  int total_degree() const;

  OperatorPoly operator-() const;
  OperatorPoly& operator+=(const OperatorPoly& o);
  OperatorPoly& operator-=(const OperatorPoly& o);
  OperatorPoly& operator*=(const OperatorPoly& o) { return *this = *this * o; }

  friend OperatorPoly operator+(OperatorPoly a, const OperatorPoly& b) { return a += b; }
  friend OperatorPoly operator-(OperatorPoly a, const OperatorPoly& b) { return a -= b; }
  OperatorPoly operator*(const OperatorPoly& o) const;

  OperatorPoly operator*(const HbarScalar& s) const;
  OperatorPoly pow(unsigned e) const;

  bool operator==(const OperatorPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const OperatorPoly& o) const { return !(*this == o); }

  /// Reverses each word and conjugates coefficients, renormal-ordering the
  /// result; an involution.
  OperatorPoly adjoint() const;

  bool is_self_adjoint() const { return *this == adjoint(); }

  /// Normal-ordered terms rendered as e.g. "q^2 p^2 - 2 i hbar q p - 1/2 hbar^2".
  std::string str() const;

  void add_term(Monomial m, HbarScalar c);

 private:
  std::map<Monomial, HbarScalar> terms_;
};

std::ostream& operator<<(std::ostream& os, const OperatorPoly& op);

inline OperatorPoly commutator(const OperatorPoly& a, const OperatorPoly& b) {
  return a * b - b * a;
}

/// Truncated harmonic-basis representation: q and p as the standard ladder
/// combinations on dim levels. Entries touching the top total_degree rows are
/// truncation-contaminated; uncontaminated_block gives the safe leading block.
ComplexMatrix to_matrix(const OperatorPoly& op, int dim, double hbar);

/// dim minus the operator's total degree (the largest leading block whose
/// entries are exact).
int uncontaminated_block(const OperatorPoly& op, int dim);

}  // namespace phasespace
