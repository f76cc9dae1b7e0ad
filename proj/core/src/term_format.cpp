#include "term_format.hpp"

#include <algorithm>
#include <tuple>
#include <vector>

namespace phasespace::detail {

namespace {

struct FlatTerm {
  int q;
  int p;
  unsigned hbar;
  CRational coeff;
};

void append_power(std::string& s, const char* sym, int e) {
  if (e == 0) return;
  if (!s.empty()) s += ' ';
  s += sym;
  if (e > 1) {
    s += '^';
    s += std::to_string(e);
  }
}

}  // namespace

std::string format_terms(const std::map<Monomial, HbarScalar>& terms) {
  std::vector<FlatTerm> flat;
  for (const auto& [mono, scalar] : terms)
    for (unsigned k = 0; k <= static_cast<unsigned>(scalar.degree()); ++k)
      if (!scalar.coeff(k).is_zero()) flat.push_back({mono.q, mono.p, k, scalar.coeff(k)});

  if (flat.empty()) return "0";

  std::sort(flat.begin(), flat.end(), [](const FlatTerm& a, const FlatTerm& b) {
    return std::make_tuple(-(a.q + a.p), -a.q, a.hbar) <
           std::make_tuple(-(b.q + b.p), -b.q, b.hbar);
  });

  std::string out;
  bool first = true;
  for (const auto& t : flat) {
    bool negative = false;
    std::string factors;

    if (t.coeff.is_real()) {
      negative = t.coeff.re().is_negative();
      Rational mag = t.coeff.re().abs();
      if (!mag.is_one()) factors = mag.str();
    } else if (t.coeff.re().is_zero()) {
      negative = t.coeff.im().is_negative();
      Rational mag = t.coeff.im().abs();
      if (!mag.is_one()) factors = mag.str();
      factors += factors.empty() ? "i" : " i";
    } else {
      factors = t.coeff.str();  // parenthesized mixed complex
    }

    append_power(factors, "hbar", static_cast<int>(t.hbar));
    append_power(factors, "q", t.q);
    append_power(factors, "p", t.p);
    if (factors.empty()) factors = "1";

    if (first) {
      if (negative) out += '-';
      out += factors;
      first = false;
    } else {
      out += negative ? " - " : " + ";
      out += factors;
    }
  }
  return out;
}

}  // namespace phasespace::detail
