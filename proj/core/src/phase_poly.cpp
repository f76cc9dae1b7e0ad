#include "phasespace/phase_poly.hpp"

#include "term_format.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace phasespace {

PhasePoly PhasePoly::monomial(int q_exp, int p_exp, HbarScalar coeff) {
  PhasePoly f;
  f.add_term({q_exp, p_exp}, std::move(coeff));
  return f;
}

void PhasePoly::add_term(Monomial m, HbarScalar c) {
  if (c.is_zero()) return;
  if (m.q < 0 || m.p < 0) throw std::invalid_argument("PhasePoly: negative exponent");
  auto [it, inserted] = terms_.try_emplace(m, std::move(c));
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HbarScalar PhasePoly::coeff(int q_exp, int p_exp) const {
  auto it = terms_.find({q_exp, p_exp});
  return it == terms_.end() ? HbarScalar() : it->second;
}

int PhasePoly::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
  return d;
}

bool PhasePoly::is_real_classical() const {
  for (const auto& [m, c] : terms_)
    if (!c.is_constant() || !c.is_real()) return false;
  return true;
}

PhasePoly PhasePoly::operator-() const {
  PhasePoly r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

PhasePoly& PhasePoly::operator+=(const PhasePoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

PhasePoly& PhasePoly::operator-=(const PhasePoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

PhasePoly PhasePoly::operator*(const PhasePoly& o) const {
  PhasePoly r;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) r.add_term({ma.q + mb.q, ma.p + mb.p}, ca * cb);
  return r;
}

PhasePoly PhasePoly::operator*(const HbarScalar& s) const {
  PhasePoly r;
  if (s.is_zero()) return r;
  for (const auto& [m, c] : terms_) r.add_term(m, c * s);
  return r;
}

PhasePoly PhasePoly::pow(unsigned e) const {
  PhasePoly r = one();
  for (unsigned k = 0; k < e; ++k) r = r * *this;
  return r;
}

PhasePoly PhasePoly::d_dq() const {
  PhasePoly r;
  for (const auto& [m, c] : terms_)
    if (m.q > 0) r.add_term({m.q - 1, m.p}, c * Rational(m.q));
  return r;
}

PhasePoly PhasePoly::d_dp() const {
  PhasePoly r;
  for (const auto& [m, c] : terms_)
    if (m.p > 0) r.add_term({m.q, m.p - 1}, c * Rational(m.p));
  return r;
}

std::complex<double> PhasePoly::eval(double q, double p, double hbar) const {
  std::complex<double> acc(0.0, 0.0);
  for (const auto& [m, c] : terms_)
    acc += c.eval(hbar) * std::pow(q, m.q) * std::pow(p, m.p);
  return acc;
}

double PhasePoly::eval_real(double q, double p, double hbar) const {
  const std::complex<double> v = eval(q, p, hbar);
  return v.real();
}

std::string PhasePoly::str() const { return detail::format_terms(terms_); }

std::ostream& operator<<(std::ostream& os, const PhasePoly& f) { return os << f.str(); }

PhasePoly poisson_bracket(const PhasePoly& f, const PhasePoly& g) {
  return f.d_dq() * g.d_dp() - f.d_dp() * g.d_dq();
}

}  // namespace phasespace
