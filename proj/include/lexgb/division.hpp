#pragma once

// Multivariate division with remainder under lex.
//
// f = sum_i q_i g_i + remainder, and no term of the remainder is divisible by
// any leading monomial of the divisors. The divisor for each step is the
// first g_i (lowest index) whose leading monomial divides the current
// leading term.

#include <cstddef>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

#include "lexgb/ideal_basis.hpp"
#include "lexgb/polynomial.hpp"

namespace lexgb {

class StepLimitExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kUnlimitedSteps = std::numeric_limits<std::size_t>::max();

struct DivisionResult {
    std::vector<Polynomial> quotients;  // one per divisor; empty for an empty basis
    Polynomial remainder;
    std::size_t steps = 0;  // leading-term reductions performed
};

/// Leading monomial of the working polynomial before every step; strictly
/// decreasing for a terminating division.
struct DivisionTrace {
    std::vector<Monomial> leading_monomials;
};

DivisionResult normal_form(const Polynomial& f, std::span<const Polynomial> divisors,
                           DivisionTrace* trace = nullptr);
DivisionResult normal_form(const Polynomial& f, const IdealBasis& basis, DivisionTrace* trace = nullptr);

/// Remainder only. Throws StepLimitExceeded once `*steps` would pass
/// `max_steps`; `steps` accumulates across calls when non-null.
Polynomial reduce(const Polynomial& f, std::span<const Polynomial> divisors, std::size_t* steps = nullptr,
                  std::size_t max_steps = kUnlimitedSteps);

}  // namespace lexgb
