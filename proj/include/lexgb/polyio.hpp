#pragma once

// Text and LaTeX forms of polynomials. Both print the unknowns as C_{-k};
// the text parser accepts either C_{-k} or the internal Ck spelling, with
// factors joined by '*' or whitespace, e.g. "C_{-2}^2 + 2 C_{-1} C_{-3} - 1/3*y".

#include <string>
#include <string_view>

#include "lexgb/ideal_basis.hpp"
#include "lexgb/polynomial.hpp"

namespace lexgb {

std::string to_text(const Polynomial& f);
std::string to_latex(const Polynomial& f);

/// Throws std::invalid_argument with the offending position on bad input.
Polynomial parse_polynomial(std::string_view text, const Ring& ring);

}  // namespace lexgb
