#pragma once

// The explicit rank-r Groebner basis G_{2r+1} of the special system:
//   odd    ~E_{2t-1} = C_{-2t}                               t = 1..r
//   even   ~E_{2t}   = C_{-2t-1} + lambda_t C_{-1}^{t+1}     t = 1..r
//   last   ~E_{2r+1} = mu_r C_{-1}^{r+1} + y
// Coefficients come from ClosedFormParams so tests can perturb them.

#include <vector>

#include "lexgb/ideal_basis.hpp"
#include "lexgb/rational.hpp"

namespace lexgb {

struct ClosedFormParams {
    int r = 1;
    std::vector<Rational> lambdas;  // lambdas[t] for t = 0..r; index 0 is unused by the basis
    Rational mu;

    /// lambda_t and mu_r from their closed forms.
    static ClosedFormParams exact(int r);
};

struct ClosedFormBasis {
    int r = 1;
    std::vector<Polynomial> odd_gens;   // ~E_1, ~E_3, ..., ~E_{2r-1}
    std::vector<Polynomial> even_gens;  // ~E_2, ~E_4, ..., ~E_{2r}
    Polynomial last;                    // ~E_{2r+1}

    /// ~E_index for index = 1..2r+1.
    const Polynomial& tilde(int index) const;
    /// [~E_1, ..., ~E_count] in index order.
    IdealBasis prefix(int count) const;
    IdealBasis full() const { return prefix(2 * r + 1); }
};

/// Throws std::invalid_argument for r < 1, a wrong lambda count, or mu = 0.
ClosedFormBasis closed_form(const ClosedFormParams& params);

/// [~E_1, ..., ~E_{2r+1}] with exact coefficients.
IdealBasis closed_form_basis(int r);

/// The unique lex-reduced form of G_{2r+1}:
///   C_{-2t} (t = 1..r), C_{-2t-1} + lambda_t C_{-1}^{t+1} (t < r),
///   C_{-2r-1} - (lambda_r / mu_r) y,  C_{-1}^{r+1} + y / mu_r,
/// sorted by descending leading monomial.
IdealBasis expected_reduced_basis(int r);

}  // namespace lexgb
