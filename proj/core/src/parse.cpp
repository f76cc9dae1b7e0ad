#include "phasespace/parse.hpp"

#include <cctype>

namespace phasespace {

namespace {

constexpr int kMaxExponent = 512;

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  std::size_t offset() const { return pos_ + 1; }  // 1-based
  void advance() { ++pos_; }

  bool consume(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(offset(), msg); }

  BigInt digits() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a digit");
    BigInt v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      advance();
    }
    if (peek() == '.') fail("non-integer literal");
    return v;
  }

  int exponent() {
    if (peek() == '-') fail("negative exponent");
    if (peek() == '+') fail("expected an unsigned exponent");
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent after '^'");
    const std::size_t at = offset();
    BigInt v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      if (v > kMaxExponent) throw ParseError(at, "exponent too large");
      advance();
    }
    if (peek() == '.') fail("non-integer exponent");
    return static_cast<int>(v);
  }

  // 'q', 'p' or 'hbar'; returns 0 when the next token does not start a factor.
  char symbol() {
    skip_ws();
    if (text_.compare(pos_, 4, "hbar") == 0) {
      pos_ += 4;
      return 'h';
    }
    const char c = peek();
    if (c == 'q' || c == 'p') {
      advance();
      return c;
    }
    return '\0';
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

PhasePoly parse_phase_poly(std::string_view text) {
  Scanner s(text);
  if (s.at_end()) throw ParseError(1, "empty expression");

  PhasePoly result;
  bool subtract = false;
  for (;;) {
    s.skip_ws();

    // Optional sign folded into the term (also covers the first term).
    bool negative = subtract;
    if (s.peek() == '-') {
      negative = !negative;
      s.advance();
      s.skip_ws();
    } else if (s.peek() == '+') {
      s.advance();
      s.skip_ws();
    }

    Rational coeff(1);
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(s.peek()))) {
      BigInt num = s.digits();
      BigInt den = 1;
      if (s.consume('/')) {
        const std::size_t at = s.offset();
        den = s.digits();
        if (den == 0) throw ParseError(at, "zero denominator");
      }
      coeff = Rational(num, den);
      have_coeff = true;
    }

    int q_exp = 0, p_exp = 0, hbar_exp = 0;
    bool have_factor = false;
    for (;;) {
      const std::size_t at = s.offset();
      const char sym = s.symbol();
      if (sym == '\0') break;
      int e = 1;
      if (s.consume('^')) e = s.exponent();
      switch (sym) {
        case 'q': q_exp += e; break;
        case 'p': p_exp += e; break;
        default: hbar_exp += e; break;
      }
      if (q_exp > kMaxExponent || p_exp > kMaxExponent || hbar_exp > kMaxExponent)
        throw ParseError(at, "exponent too large");
      have_factor = true;
    }

    if (!have_coeff && !have_factor) s.fail("expected a term");

    if (negative) coeff = -coeff;
    result.add_term({q_exp, p_exp},
                    HbarScalar::hbar_term(CRational(coeff), static_cast<unsigned>(hbar_exp)));

    if (s.at_end()) break;
    if (s.peek() == '+') {
      s.advance();
      subtract = false;
    } else if (s.peek() == '-') {
      s.advance();
      subtract = true;
    } else {
      s.fail("expected '+', '-' or end of expression");
    }
  }
  return result;
}

}  // namespace phasespace
