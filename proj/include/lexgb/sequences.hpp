#pragma once

// Combinatorial sequences behind the closed-form basis: binomials, Catalan
// numbers c_j, the basis coefficients lambda_j (lambda_0 = -1) and the last
// generator's coefficient mu_r, plus the exact identities linking them.
//
// Closed forms are the production path and are memoized in process-wide
// tables. The recursive definitions are exposed separately so that claim
// checks can compare the two routes.

#include <cstdint>
#include <vector>

#include "lexgb/rational.hpp"

namespace lexgb {

/// C(n, k); zero when k < 0 or k > n.
BigInt binomial(std::int64_t n, std::int64_t k);

/// alpha (alpha - 1) ... (alpha - j + 1) / j!
Rational general_binomial(const Rational& alpha, std::int64_t j);

/// c_j = binomial(2j, j) / (j + 1).
BigInt catalan(std::int64_t j);

/// lambda_j = (-1)^{j+1} binomial(2j, j) / ((j + 1) 2^j).
Rational lambda_j(std::int64_t j);

/// mu_r = (2r + 1) binomial(2r, r) / ((r + 1) 2^r). Rejects r < 1.
Rational mu_r(std::int64_t r);

/// Catalan numbers c_0..c_{count-1} from c_0 = 1 and the convolution
/// c_r = sum_{j<r} c_j c_{r-1-j}.
std::vector<BigInt> catalan_by_recursion(std::size_t count);

/// lambda_0..lambda_{count-1} from lambda_0 = -1 and
/// lambda_j = 1/2 sum_{k<j} lambda_k lambda_{j-k-1}.
std::vector<Rational> lambda_by_recursion(std::size_t count);

/// (2r+1) c_r / 4^r == sum_{j<=r} (-1)^j binomial(r, j) c_j / 4^j.
bool catalan_identity(std::int64_t r);

/// (2r+1) (-1)^{r+1} lambda_r == sum_{j<=r} binomial(r, j) 2^{r-j} (-lambda_j).
bool lambda_binomial_identity(std::int64_t r);

/// c_j == (-1)^{j+1} 2^j lambda_j, with lambda_j taken from the recursion.
bool catalan_lambda_link(std::int64_t j);

}  // namespace lexgb
