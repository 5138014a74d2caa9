#include "lexgb/monomial.hpp"

#include <stdexcept>
#include <string>

namespace lexgb {

namespace {
constexpr unsigned kMaxExponent = 0xFFFFu;
}

Monomial::Monomial(std::size_t rank) : e_(simd::padded_length(rank), 0), rank_(static_cast<std::uint32_t>(rank)) {}

Monomial Monomial::from_exponents(std::span<const unsigned> exponents) {
    Monomial m(exponents.size());
    for (std::size_t i = 0; i < exponents.size(); ++i) m.set(i, exponents[i]);
    return m;
}

void Monomial::set(std::size_t i, unsigned value) {
    if (i >= rank_) throw std::out_of_range("monomial variable index out of range");
    if (value > kMaxExponent) throw std::overflow_error("exponent " + std::to_string(value) + " exceeds 16 bits");
    e_[i] = static_cast<Exponent>(value);
}

std::vector<unsigned> Monomial::exponents() const { return {e_.begin(), e_.begin() + rank_}; }

std::uint64_t Monomial::total_degree() const { return simd::active().degree(e_.data(), e_.size()); }

void Monomial::check_rank(const Monomial& other) const {
    if (rank_ != other.rank_) throw std::invalid_argument("monomials from rings of different rank");
}

bool Monomial::divides(const Monomial& other) const {
    check_rank(other);
    return simd::active().divides(e_.data(), other.e_.data(), e_.size());
}

bool Monomial::coprime_with(const Monomial& other) const {
    check_rank(other);
    return simd::active().coprime(e_.data(), other.e_.data(), e_.size());
}

Monomial Monomial::operator*(const Monomial& other) const {
    check_rank(other);
    Monomial out(rank_);
    if (!simd::active().mul(e_.data(), other.e_.data(), out.e_.data(), e_.size()))
        throw std::overflow_error("monomial product exponent exceeds 16 bits");
    return out;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
    if (!divisor.divides(*this)) throw std::domain_error("monomial quotient is not exact");
    Monomial out(rank_);
    simd::active().quotient(divisor.e_.data(), e_.data(), out.e_.data(), e_.size());
    return out;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    a.check_rank(b);
    Monomial out(a.rank_);
    simd::active().lcm(a.e_.data(), b.e_.data(), out.e_.data(), a.e_.size());
    return out;
}

std::strong_ordering lex_compare(const Monomial& a, const Monomial& b) {
    a.check_rank(b);
    const int c = simd::active().lex_compare(a.e_.data(), b.e_.data(), a.e_.size());
    return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

}  // namespace lexgb
