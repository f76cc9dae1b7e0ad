#include "phasespace/quantize.hpp"

#include <algorithm>
#include <stdexcept>

namespace phasespace {

namespace {

// i^k as a complex rational unit.
CRational i_pow(unsigned k) {
  switch (k % 4) {
    case 0: return CRational(Rational(1));
    case 1: return CRational::i();
    case 2: return CRational(Rational(-1));
    default: return CRational(Rational(0), Rational(-1));
  }
}

OperatorPoly weyl_monomial_q_split(int n, int m) {
  OperatorPoly acc;
  const OperatorPoly p_m = OperatorPoly::p(m);
  for (int k = 0; k <= n; ++k) {
    OperatorPoly term = OperatorPoly::q(k) * p_m * OperatorPoly::q(n - k);
    acc += term * HbarScalar(Rational::binomial(n, k));
  }
  return acc * HbarScalar(Rational::pow2(-n));
}

OperatorPoly weyl_monomial_p_split(int n, int m) {
  OperatorPoly acc;
  const OperatorPoly q_n = OperatorPoly::q(n);
  for (int k = 0; k <= m; ++k) {
    OperatorPoly term = OperatorPoly::p(k) * q_n * OperatorPoly::p(m - k);
    acc += term * HbarScalar(Rational::binomial(m, k));
  }
  return acc * HbarScalar(Rational::pow2(-m));
}

}  // namespace

OperatorPoly weyl_quantize(const PhasePoly& f) {
  OperatorPoly out;
  for (const auto& [mono, c] : f.terms()) out += weyl_monomial_q_split(mono.q, mono.p) * c;
  return out;
}

OperatorPoly weyl_quantize_p_split(const PhasePoly& f) {
  OperatorPoly out;
  for (const auto& [mono, c] : f.terms()) out += weyl_monomial_p_split(mono.q, mono.p) * c;
  return out;
}

OperatorPoly symmetrize_monomial(int n, int m) {
  if (n < 0 || m < 0) throw std::invalid_argument("symmetrize_monomial: negative exponent");
  if (n + m > 12) throw std::invalid_argument("symmetrize_monomial: n+m > 12 refused");

  // 0 = q, 1 = p; next_permutation walks every distinct ordering exactly once.
  std::vector<char> letters(static_cast<std::size_t>(n), 0);
  letters.insert(letters.end(), static_cast<std::size_t>(m), 1);

  OperatorPoly sum;
  BigInt count = 0;
  do {
    OperatorPoly word = OperatorPoly::one();
    for (char l : letters) word = word * (l == 0 ? OperatorPoly::q() : OperatorPoly::p());
    sum += word;
    ++count;
  } while (std::next_permutation(letters.begin(), letters.end()));

  return sum * HbarScalar(Rational(BigInt(1), count));
}

PhasePoly weyl_symbol(const OperatorPoly& op) {
  PhasePoly out;
  for (const auto& [mono, c] : op.terms()) {
    const int a = mono.q, b = mono.p;
    const int kmax = std::min(a, b);
    for (int k = 0; k <= kmax; ++k) {
      Rational r = Rational::factorial(k) * Rational::binomial(a, k) * Rational::binomial(b, k) *
                   Rational::pow2(-k);
      out.add_term({a - k, b - k},
                   c * HbarScalar::hbar_term(i_pow(static_cast<unsigned>(k)) * r,
                                             static_cast<unsigned>(k)));
    }
  }
  return out;
}

PhasePoly star_product(const PhasePoly& f, const PhasePoly& g) {
  const int kmax = std::min(f.total_degree(), g.total_degree());
  PhasePoly out;
  for (int k = 0; k <= kmax; ++k) {
    // (1/k!) (i hbar / 2)^k sum_j (-1)^j C(k,j) (dq^(k-j) dp^j f)(dq^j dp^(k-j) g)
    PhasePoly level;
    for (int j = 0; j <= k; ++j) {
      PhasePoly df = f, dg = g;
      for (int t = 0; t < k - j; ++t) df = df.d_dq();
      for (int t = 0; t < j; ++t) df = df.d_dp();
      for (int t = 0; t < j; ++t) dg = dg.d_dq();
      for (int t = 0; t < k - j; ++t) dg = dg.d_dp();
      PhasePoly prod = df * dg;
      Rational sign = (j % 2 == 0) ? Rational(1) : Rational(-1);
      level += prod * HbarScalar(sign * Rational::binomial(k, j));
    }
    Rational scale = Rational::pow2(-k) / Rational::factorial(static_cast<unsigned>(k));
    out += level * HbarScalar::hbar_term(i_pow(static_cast<unsigned>(k)) * scale,
                                         static_cast<unsigned>(k));
  }
  return out;
}

PhasePoly moyal_bracket_sym(const PhasePoly& f, const PhasePoly& g) {
  PhasePoly num = star_product(f, g) - star_product(g, f);
  PhasePoly out;
  for (const auto& [mono, c] : num.terms()) {
    try {
      out.add_term(mono, c.div_i_hbar());
    } catch (const std::domain_error&) {
      throw std::logic_error(
          "moyal_bracket_sym: hbar^0 part of the star commutator did not cancel");
    }
  }
  return out;
}

std::string placement_label(const Placement& pl) {
  std::string s;
  auto piece = [&s](const char* name, int k) {
    if (k == 0) return;
    if (!s.empty()) s += ", ";
    s += name;
    if (k > 1) s += "^" + std::to_string(k);
  };
  piece("left q", pl.left_q);
  piece("right q", pl.right_q);
  piece("op q", pl.op_q);
  return s.empty() ? "plain" : s;
}

std::vector<Placement> all_placements(int n) {
  std::vector<Placement> out;
  for (int w = n; w >= 0; --w)
    for (int l = n - w; l >= 0; --l) out.push_back({l, n - w - l, w});
  return out;
}

OperatorPoly placement_variant_raw(int n, int m, const Placement& placement) {
  if (n < 0 || m < 0) throw std::invalid_argument("placement_variant: negative exponent");
  if (placement.left_q < 0 || placement.right_q < 0 || placement.op_q < 0 ||
      placement.total() != n)
    throw std::invalid_argument("placement_variant: placement must split the q-power");
  if (m > 8) throw std::invalid_argument("placement_variant: m > 8 refused");

  const int L = placement.left_q, R = placement.right_q, W = placement.op_q;
  const Rational m_fact = Rational::factorial(static_cast<unsigned>(m));
  const Rational half_pow_m = Rational::pow2(-m);

  OperatorPoly out;
  // delta^m coefficient of (q-d/2)^L (q+d/2)^R [jets of the two amplitudes],
  // split over binomial orders (j, j2) and jet orders (s, r).
  for (int j = 0; j <= L; ++j) {
    for (int j2 = 0; j2 <= R; ++j2) {
      const int rem = m - j - j2;
      if (rem < 0) continue;
      for (int s = 0; s <= rem; ++s) {
        const int r = rem - s;
        const int alpha = W + (L - j) + (R - j2);

        // m!/(s! r!) C(L,j) C(R,j2) (1/2)^m, sign (-1)^j after the parts
        // sign (-1)^s cancels the jet sign.
        Rational base = m_fact / (Rational::factorial(s) * Rational::factorial(r));
        base *= Rational::binomial(L, j) * Rational::binomial(R, j2) * half_pow_m;
        if (j % 2 != 0) base = -base;

        // Move the s bra-side derivatives onto q^alpha psi^(r) (Leibniz),
        // then read q^(alpha-t) d^(r+s-t) as the word q^(alpha-t) p^(r+s-t).
        for (int t = 0; t <= std::min(s, alpha); ++t) {
          const int deriv = r + s - t;  // total d/dq order landing on psi
          Rational weight = base * Rational::binomial(s, t) *
                            Rational::falling_factorial(alpha, t);
          // (-i)^m from the delta-derivative, i^deriv from d/dq = (i/hbar) p.
          CRational unit = i_pow(static_cast<unsigned>(deriv)) *
                           i_pow(static_cast<unsigned>(3 * m));  // (-i)^m = i^(3m)
          const unsigned hbar_pow = static_cast<unsigned>(m - deriv);
          out.add_term({alpha - t, deriv}, HbarScalar::hbar_term(unit * weight, hbar_pow));
        }
      }
    }
  }
  return out;
}

OperatorPoly placement_variants(int n, int m, const Placement& placement) {
  OperatorPoly raw = placement_variant_raw(n, m, placement);
  return (raw + raw.adjoint()) * HbarScalar(Rational::of(1, 2));
}

std::vector<RuleFixture> rule_catalog(const std::string& expr_id) {
  if (expr_id != "q2p2")
    throw std::invalid_argument("rule_catalog: unknown expr_id '" + expr_id + "'");

  // Every classical rule output for q^2 p^2 shares q^2 p^2 - 2 i hbar q p and
  // differs only in the hbar^2 constant.
  auto with_constant = [](const Rational& c) {
    OperatorPoly op = OperatorPoly::word(2, 2);
    op += OperatorPoly::word(1, 1, HbarScalar::hbar_term(CRational(Rational(0), Rational(-2)), 1));
    op += OperatorPoly::scalar(HbarScalar::hbar_term(CRational(c), 2));
    return op;
  };

  std::vector<RuleFixture> rows;
  rows.push_back({"von Neumann (variant 1)", expr_id, with_constant(Rational::of(-1, 4)), true});
  rows.push_back({"von Neumann (variant 2)", expr_id, with_constant(Rational(-1)), true});
  rows.push_back({"Dirac (variant 1)", expr_id, with_constant(Rational::of(-1, 3)), true});
  rows.push_back({"Dirac (variant 2)", expr_id, with_constant(Rational::of(-2, 3)), true});
  rows.push_back({"Weyl", expr_id, with_constant(Rational::of(-1, 2)), false});
  return rows;
}

}  // namespace phasespace
