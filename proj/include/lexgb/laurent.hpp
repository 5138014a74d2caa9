#pragma once

// Truncated Laurent series in x^{-1} with polynomial coefficients.
//
// A series stores coefficients for exponents floor <= e <= top; exponents
// below the floor are truncated away and reading them is an error. Products
// keep the common floor, so a coefficient of a k-fold product at exponent e
// is exact when every partial product only needs exponents >= floor; for
// factors with top exponent 1 that means floor <= e - (k - 1).

#include <cstddef>
#include <map>
#include <optional>

#include "lexgb/polynomial.hpp"

namespace lexgb {

class LaurentSeries {
public:
    /// Zero series; requires floor <= top.
    LaurentSeries(Ring ring, int top, int floor);

    /// The series 1 (top exponent 0).
    static LaurentSeries one(Ring ring, int floor);
    /// c * x^exponent.
    static LaurentSeries power_of_x(Ring ring, int exponent, int floor, const Rational& c = Rational(1));

    const Ring& ring() const { return ring_; }
    int top() const { return top_; }
    int floor() const { return floor_; }
    /// Nonzero stored coefficients keyed by x-exponent.
    const std::map<int, Polynomial>& coefficients() const { return coeffs_; }

    /// Zero when absent; throws std::out_of_range for e < floor.
    Polynomial coefficient(int e) const;
    /// Stores p at exponent e (zero erases). Throws std::out_of_range
    /// outside [floor, top].
    void set(int e, Polynomial p);

    LaurentSeries scaled(const Rational& c) const;
    LaurentSeries& operator+=(const LaurentSeries& o);

    friend bool operator==(const LaurentSeries& a, const LaurentSeries& b);

private:
    Ring ring_;
    int top_;
    int floor_;
    std::map<int, Polynomial> coeffs_;
};

/// C = x + C1 x^{-1} + ... + CT x^{-T}. The ring must contain C1..CT.
/// Floor defaults to -T.
LaurentSeries generic_C(std::size_t T, const Ring& ring, std::optional<int> floor = std::nullopt);

/// Cauchy product truncated at the common floor; throws on floor mismatch.
LaurentSeries series_mul(const LaurentSeries& a, const LaurentSeries& b);
/// Square-and-multiply; k = 0 gives the series 1.
LaurentSeries series_pow(const LaurentSeries& a, unsigned k);
/// b with a * b = 1 down to the floor, solved degree by degree. The highest
/// nonzero coefficient must be a nonzero constant at a nonnegative exponent;
/// throws std::domain_error otherwise.
LaurentSeries series_inverse(const LaurentSeries& a);

inline Polynomial coefficient(const LaurentSeries& a, int e) { return a.coefficient(e); }

}  // namespace lexgb
