#pragma once

// Polynomial systems obtained from the coefficients of powers of the generic
// series C = x + C_{-1} x^{-1} + ... .
//
// General system S(n, m, q, F): with T = m + n - 2 unknowns,
//   E_k         = (C^n)_{-k}                         k = 1..m-1
//   E_{m-1+k}   = (sum_i q_i C^{m-i})_{-k}           k = 1..n-2
//   E_{m+n-2}   = (sum_i q_i C^{m-i})_{1-n} + F
// The special rank-r system is n = 2, m = 2r + 1, q = (1, 0, ..., 0):
//   E_i = (C^2)_{-i} for i = 1..2r and E_{2r+1} = (C^{2r+1})_{-1} + y.

#include <optional>
#include <string>
#include <vector>

#include "lexgb/ideal_basis.hpp"
#include "lexgb/laurent.hpp"

namespace lexgb {

struct SystemSpec {
    int n = 2;
    int m = 3;
    /// Weights q_0..q_{m+n-2} on C^m, C^{m-1}, ..., C^{2-n}; q_0 = 1.
    std::vector<Rational> q_weights;
    /// Name of the variable standing for the leading coefficient of F.
    std::string f_symbol = "y";

    /// q = (1, 0, ..., 0).
    static SystemSpec with_leading_weight(int n, int m, std::string f_symbol = "y");

    int unknowns() const { return m + n - 2; }
    /// Throws std::invalid_argument describing the first violated condition.
    void validate() const;

    friend bool operator==(const SystemSpec&, const SystemSpec&) = default;
};

/// C_{2r+1} > ... > C_{-1} > y.
Ring special_ring(int r);

/// [E_1, ..., E_{2r}, E_{2r+1}] over special_ring(r). Floor defaults to
/// -(2r + 1), which is exact for every extracted coefficient.
IdealBasis build_special_system(int r, std::optional<int> floor = std::nullopt);

/// E_i = 2 C_{-i-1} + sum_{k=1}^{i-1} C_{-k} C_{k-i}, built term by term.
Polynomial e_poly_direct(int i, const Ring& ring);

/// The m + n - 2 equations of S(n, m, q, F). Floor defaults to -(m + n - 2).
IdealBasis build_general_system(const SystemSpec& spec, std::optional<int> floor = std::nullopt);

}  // namespace lexgb
