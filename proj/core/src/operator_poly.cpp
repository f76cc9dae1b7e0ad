#include "phasespace/operator_poly.hpp"

#include "term_format.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace phasespace {

namespace {

// (-i)^k as a complex rational unit.
CRational minus_i_pow(unsigned k) {
  switch (k % 4) {
    case 0: return CRational(Rational(1));
    case 1: return CRational(Rational(0), Rational(-1));
    case 2: return CRational(Rational(-1));
    default: return CRational(Rational(0), Rational(1));
  }
}

// Reordering identity: p^m q^n = sum_k k! C(m,k) C(n,k) (-i hbar)^k q^(n-k) p^(m-k).
// Appends the expansion, scaled by `scale`, into `out`.
void emit_reordered(int m, int n, const HbarScalar& scale, OperatorPoly& out) {
  const int kmax = std::min(m, n);
  for (int k = 0; k <= kmax; ++k) {
    Rational c = Rational::factorial(static_cast<unsigned>(k)) *
                 Rational::binomial(static_cast<unsigned>(m), static_cast<unsigned>(k)) *
                 Rational::binomial(static_cast<unsigned>(n), static_cast<unsigned>(k));
    HbarScalar factor = HbarScalar::hbar_term(minus_i_pow(static_cast<unsigned>(k)) * c,
                                              static_cast<unsigned>(k));
    out.add_term({n - k, m - k}, factor * scale);
  }
}

}  // namespace

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& o) const {
  ComplexMatrix r(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int k = 0; k < dim_; ++k) {
      const std::complex<double> aik = at(i, k);
      if (aik == std::complex<double>(0.0, 0.0)) continue;
      for (int j = 0; j < dim_; ++j) r.at(i, j) += aik * o.at(k, j);
    }
  return r;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::scale(std::complex<double> s) {
  for (auto& v : a_) v *= s;
  return *this;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& o, int block) const {
  double m = 0.0;
  for (int i = 0; i < block; ++i)
    for (int j = 0; j < block; ++j) m = std::max(m, std::abs(at(i, j) - o.at(i, j)));
  return m;
}

OperatorPoly OperatorPoly::word(int q_exp, int p_exp, HbarScalar coeff) {
  OperatorPoly op;
  op.add_term({q_exp, p_exp}, std::move(coeff));
  return op;
}

void OperatorPoly::add_term(Monomial m, HbarScalar c) {
  if (c.is_zero()) return;
  if (m.q < 0 || m.p < 0) throw std::invalid_argument("OperatorPoly: negative exponent");
  auto [it, inserted] = terms_.try_emplace(m, std::move(c));
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HbarScalar OperatorPoly::coeff(int q_exp, int p_exp) const {
  auto it = terms_.find({q_exp, p_exp});
  return it == terms_.end() ? HbarScalar() : it->second;
}

int OperatorPoly::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
  return d;
}

OperatorPoly OperatorPoly::operator-() const {
  OperatorPoly r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

OperatorPoly& OperatorPoly::operator+=(const OperatorPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

OperatorPoly& OperatorPoly::operator-=(const OperatorPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

OperatorPoly OperatorPoly::operator*(const OperatorPoly& o) const {
  OperatorPoly r;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) {
      // (q^a1 p^b1)(q^a2 p^b2) = q^a1 [p^b1 q^a2] p^b2
      OperatorPoly middle;
      emit_reordered(ma.p, mb.q, ca * cb, middle);
      for (const auto& [mm, cm] : middle.terms_) r.add_term({ma.q + mm.q, mm.p + mb.p}, cm);
    }
  return r;
}

OperatorPoly OperatorPoly::operator*(const HbarScalar& s) const {
  OperatorPoly r;
  if (s.is_zero()) return r;
  for (const auto& [m, c] : terms_) r.add_term(m, c * s);
  return r;
}

OperatorPoly OperatorPoly::pow(unsigned e) const {
  OperatorPoly r = one();
  for (unsigned k = 0; k < e; ++k) r = r * *this;
  return r;
}

OperatorPoly OperatorPoly::adjoint() const {
  // (q^a p^b)^dag = p^b q^a, coefficients conjugated.
  OperatorPoly r;
  for (const auto& [m, c] : terms_) emit_reordered(m.p, m.q, c.conj(), r);
  return r;
}

std::string OperatorPoly::str() const { return detail::format_terms(terms_); }

std::ostream& operator<<(std::ostream& os, const OperatorPoly& op) { return os << op.str(); }

int uncontaminated_block(const OperatorPoly& op, int dim) {
  return dim - std::max(op.total_degree(), 0);
}

ComplexMatrix to_matrix(const OperatorPoly& op, int dim, double hbar) {
  if (dim < 2) throw std::invalid_argument("to_matrix: dim must be >= 2");
  if (!(hbar > 0.0)) throw std::invalid_argument("to_matrix: hbar must be positive");
  if (uncontaminated_block(op, dim) < 1)
    throw std::invalid_argument("to_matrix: dim too small for an uncontaminated block");

  // Ladder representation: q = sqrt(hbar/2)(a + a^dag), p = i sqrt(hbar/2)(a^dag - a).
  ComplexMatrix qm(dim), pm(dim);
  for (int j = 0; j + 1 < dim; ++j) {
    const double r = std::sqrt(hbar * (j + 1) / 2.0);
    qm.at(j, j + 1) = r;
    qm.at(j + 1, j) = r;
    pm.at(j, j + 1) = std::complex<double>(0.0, -r);
    pm.at(j + 1, j) = std::complex<double>(0.0, r);
  }

  // Cache powers up to the needed exponents.
  int max_q = 0, max_p = 0;
  for (const auto& [m, c] : op.terms()) {
    max_q = std::max(max_q, m.q);
    max_p = std::max(max_p, m.p);
  }
  std::vector<ComplexMatrix> qpow, ppow;
  qpow.reserve(max_q + 1);
  ppow.reserve(max_p + 1);
  ComplexMatrix ident(dim);
  for (int i = 0; i < dim; ++i) ident.at(i, i) = 1.0;
  qpow.push_back(ident);
  ppow.push_back(ident);
  for (int e = 1; e <= max_q; ++e) qpow.push_back(qpow.back() * qm);
  for (int e = 1; e <= max_p; ++e) ppow.push_back(ppow.back() * pm);

  ComplexMatrix out(dim);
  for (const auto& [m, c] : op.terms()) {
    ComplexMatrix term = qpow[static_cast<std::size_t>(m.q)] * ppow[static_cast<std::size_t>(m.p)];
    term.scale(c.eval(hbar));
    out += term;
  }
  return out;
}

}  // namespace phasespace
