#include "phasespace/hbar_scalar.hpp"

#include <ostream>
#include <stdexcept>

namespace phasespace {

HbarScalar::HbarScalar(CRational c) {
  if (!c.is_zero()) coeffs_.push_back(std::move(c));
}

HbarScalar::HbarScalar(Rational r) : HbarScalar(CRational(std::move(r))) {}

HbarScalar::HbarScalar(std::int64_t n) : HbarScalar(CRational(Rational(n))) {}

HbarScalar HbarScalar::hbar_term(CRational c, unsigned power) {
  HbarScalar s;
  if (c.is_zero()) return s;
  s.coeffs_.assign(power + 1, CRational());
  s.coeffs_[power] = std::move(c);
  return s;
}

CRational HbarScalar::coeff(unsigned power) const {
  if (power >= coeffs_.size()) return CRational();
  return coeffs_[power];
}

bool HbarScalar::is_real() const {
  for (const auto& c : coeffs_)
    if (!c.is_real()) return false;
  return true;
}

HbarScalar HbarScalar::conj() const {
  HbarScalar s;
  s.coeffs_.reserve(coeffs_.size());
  for (const auto& c : coeffs_) s.coeffs_.push_back(c.conj());
  return s;  // hbar is a real symbol; conjugation never changes the degree
}

HbarScalar HbarScalar::operator-() const {
  HbarScalar s;
  s.coeffs_.reserve(coeffs_.size());
  for (const auto& c : coeffs_) s.coeffs_.push_back(-c);
  return s;
}

void HbarScalar::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

HbarScalar& HbarScalar::operator+=(const HbarScalar& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

HbarScalar& HbarScalar::operator-=(const HbarScalar& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

HbarScalar& HbarScalar::operator*=(const HbarScalar& o) {
  if (coeffs_.empty() || o.coeffs_.empty()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<CRational> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t a = 0; a < coeffs_.size(); ++a)
    for (std::size_t b = 0; b < o.coeffs_.size(); ++b) out[a + b] += coeffs_[a] * o.coeffs_[b];
  coeffs_ = std::move(out);
  trim();
  return *this;
}

HbarScalar HbarScalar::operator*(const CRational& s) const {
  HbarScalar r;
  if (s.is_zero() || coeffs_.empty()) return r;
  r.coeffs_.reserve(coeffs_.size());
  for (const auto& c : coeffs_) r.coeffs_.push_back(c * s);
  r.trim();
  return r;
}

HbarScalar HbarScalar::div_i_hbar() const {
  if (coeffs_.empty()) return {};
  if (!coeffs_.front().is_zero())
    throw std::domain_error("HbarScalar: inexact division by i*hbar");
  HbarScalar r;
  r.coeffs_.assign(coeffs_.begin() + 1, coeffs_.end());
  // 1/i = -i
  const CRational minus_i(Rational(0), Rational(-1));
  for (auto& c : r.coeffs_) c *= minus_i;
  return r;
}

std::complex<double> HbarScalar::eval(double hbar) const {
  // Horner, highest power first.
  std::complex<double> acc(0.0, 0.0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * hbar + it->to_complex();
  return acc;
}

std::string HbarScalar::str() const {
  if (coeffs_.empty()) return "0";
  std::string s;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    if (!first) s += " + ";
    s += coeffs_[k].str();
    if (k >= 1) {
      s += " hbar";
      if (k >= 2) s += "^" + std::to_string(k);
    }
    first = false;
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const HbarScalar& s) { return os << s.str(); }

}  // namespace phasespace
