#pragma once

#include "phasespace/errors.hpp"
#include "phasespace/phase_poly.hpp"

#include <string_view>

namespace phasespace {

/// Parses the expression grammar
///
///   expr     := term (('+'|'-') term)*
///   term     := sign? (rational)? factor*   (at least one of rational/factor)
///   factor   := ('q'|'p'|'hbar') ('^' uint)?
///   rational := int ('/' uint)?
///
/// Whitespace separates factors; juxtaposition means multiplication.
/// Examples: "1/2 p^2 + 1/2 q^2", "q^2 p^2", "3/4 hbar^2 q^2".
/// Throws ParseError with a 1-based byte offset on malformed input.
PhasePoly parse_phase_poly(std::string_view text);

}  // namespace phasespace
