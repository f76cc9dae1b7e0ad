#pragma once

#include "phasespace/operator_poly.hpp"
#include "phasespace/phase_poly.hpp"

#include <string>
#include <vector>

namespace phasespace {

/// Weyl image of a phase-space polynomial: the monomial q^n p^m maps to
/// (1/2^n) sum_k C(n,k) q^k p^m q^(n-k), extended linearly. Real polynomials
/// map to self-adjoint operators; q^n and p^m map to plain powers.
OperatorPoly weyl_quantize(const PhasePoly& f);

/// Same map through the p-split form (1/2^m) sum_k C(m,k) p^k q^n p^(m-k);
/// must agree with weyl_quantize identically.
OperatorPoly weyl_quantize_p_split(const PhasePoly& f);

/// Average of all (n+m)!/(n! m!) distinct orderings of n q's and m p's.
/// Refuses n+m > 12.
OperatorPoly symmetrize_monomial(int n, int m);

/// Inverse of weyl_quantize: the unique g with weyl_quantize(g) == op, via
/// symbol(q^a p^b) = sum_k (i hbar/2)^k k! C(a,k) C(b,k) q^(a-k) p^(b-k).
PhasePoly weyl_symbol(const OperatorPoly& op);

/// Groenewold star product: finite differential series for polynomials,
/// satisfying weyl_quantize(f * g) = weyl_quantize(f) weyl_quantize(g).
PhasePoly star_product(const PhasePoly& f, const PhasePoly& g);

/// (f * g - g * f) / (i hbar); always a polynomial. Throws std::logic_error
/// if the division is inexact (which would signal a star-product bug).
PhasePoly moyal_bracket_sym(const PhasePoly& f, const PhasePoly& g);

/// Split of a q-power among the three slots of the mean-value recipe: factors
/// rewritten in the shifted variable multiplying the conjugate amplitude
/// (left_q), factors multiplying the amplitude (right_q), and factors kept as
/// the multiplication operator applied outside the differentiation (op_q).
struct Placement {
  int left_q = 0;
  int right_q = 0;
  int op_q = 0;

  int total() const { return left_q + right_q + op_q; }
  friend bool operator==(const Placement&, const Placement&) = default;
};

std::string placement_label(const Placement& pl);

/// All splits of the q-power n over (left, right, op).
std::vector<Placement> all_placements(int n);

/// Literal mean-value-recipe operator for q^n p^m under the given placement:
/// Taylor-jet expansion of the shifted amplitudes to order m, application of
/// (-i hbar d/d(dq))^m at dq = 0, then integration by parts onto a single
/// normal-ordered operator. The result is generally not self-adjoint.
OperatorPoly placement_variant_raw(int n, int m, const Placement& placement);

/// Canonical placement-variant operator: the self-adjoint part of the raw
/// sandwich, which is the operator whose mean the recipe computes on every
/// state. op_q = n reproduces Weyl's rule. Refuses m > 8.
OperatorPoly placement_variants(int n, int m, const Placement& placement);

/// One catalog row: a named quantization-rule output for a classical
/// expression, flagged ambiguous when the rule admits several answers.
struct RuleFixture {
  std::string rule_name;
  std::string expr_id;
  OperatorPoly op;
  bool ambiguous = false;
};

/// Fixed operator lists quoted from the classical ordering-rule literature.
/// Known expr_ids: "q2p2". Throws std::invalid_argument on unknown ids.
std::vector<RuleFixture> rule_catalog(const std::string& expr_id);

}  // namespace phasespace
