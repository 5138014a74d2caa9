#include "lexgb/simd/monomial_kernels.hpp"

namespace lexgb::simd::detail {

namespace {

int lex_compare(const Exponent* a, const Exponent* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

bool divides(const Exponent* a, const Exponent* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] > b[i]) return false;
    return true;
}

bool mul(const Exponent* a, const Exponent* b, Exponent* out, std::size_t n) {
    bool ok = true;
    for (std::size_t i = 0; i < n; ++i) {
        const unsigned s = unsigned{a[i]} + unsigned{b[i]};
        ok &= s <= 0xFFFFu;
        out[i] = static_cast<Exponent>(s);
    }
    return ok;
}

void quotient(const Exponent* a, const Exponent* b, Exponent* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<Exponent>(b[i] - a[i]);
}

void lcm(const Exponent* a, const Exponent* b, Exponent* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = a[i] > b[i] ? a[i] : b[i];
}

bool coprime(const Exponent* a, const Exponent* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] != 0 && b[i] != 0) return false;
    return true;
}

std::uint64_t degree(const Exponent* a, std::size_t n) {
    std::uint64_t d = 0;
    for (std::size_t i = 0; i < n; ++i) d += a[i];
    return d;
}

}  // namespace

const Kernels& scalar_kernels() {
    static const Kernels k{"scalar", lex_compare, divides, mul, quotient, lcm, coprime, degree};
    return k;
}

}  // namespace lexgb::simd::detail
