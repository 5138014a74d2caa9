#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "lexgb/simd/monomial_kernels.hpp"

namespace lexgb {

/// Dense exponent vector. Position 0 is the most significant variable under
/// lex. Storage is padded to whole SIMD blocks with zero lanes, so all
/// comparisons run through the active kernel table.
class Monomial {
public:
    using Exponent = simd::Exponent;

    Monomial() = default;
    explicit Monomial(std::size_t rank);
    /// Throws std::overflow_error if an exponent does not fit in 16 bits.
    static Monomial from_exponents(std::span<const unsigned> exponents);

    std::size_t rank() const { return rank_; }
    Exponent operator[](std::size_t i) const { return e_[i]; }
    void set(std::size_t i, unsigned value);
    std::vector<unsigned> exponents() const;

    std::uint64_t total_degree() const;
    bool is_one() const { return total_degree() == 0; }

    /// this | other
    bool divides(const Monomial& other) const;
    bool coprime_with(const Monomial& other) const;

    /// Throws std::overflow_error when an exponent leaves 16 bits.
    Monomial operator*(const Monomial& other) const;
    /// this / divisor; requires divisor.divides(*this).
    Monomial quotient(const Monomial& divisor) const;
    friend Monomial lcm(const Monomial& a, const Monomial& b);

    /// Lexicographic order; throws std::invalid_argument on rank mismatch.
    friend std::strong_ordering lex_compare(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.rank_ == b.rank_ && a.e_ == b.e_;
    }

private:
    void check_rank(const Monomial& other) const;

    std::vector<Exponent> e_;
    std::uint32_t rank_ = 0;
};

}  // namespace lexgb
