#pragma once

#include "phasespace/hbar_scalar.hpp"
#include "phasespace/operator_poly.hpp"

#include <map>
#include <string>

namespace phasespace::detail {

/// Shared golden-file text form for operator and phase-space polynomials:
/// terms sorted by (total degree desc, q-exponent desc, hbar power asc),
/// hbar rendered as `hbar`, the imaginary unit as `i`.
std::string format_terms(const std::map<Monomial, HbarScalar>& terms);

}  // namespace phasespace::detail
