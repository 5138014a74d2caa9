// Compiled with -mavx2; only reached after a runtime CPU check.
#include <immintrin.h>

#include "lexgb/simd/monomial_kernels.hpp"

namespace lexgb::simd::detail {

namespace {

inline __m256i load(const Exponent* p) { return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p)); }
inline void store(Exponent* p, __m256i v) { _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v); }

// 0xFFFFFFFF iff all 16 lanes are equal.
inline unsigned eq_mask(__m256i a, __m256i b) {
    return static_cast<unsigned>(_mm256_movemask_epi8(_mm256_cmpeq_epi16(a, b)));
}

int lex_compare(const Exponent* a, const Exponent* b, std::size_t n) {
    for (std::size_t i = 0; i < n; i += kLanes) {
        const unsigned mask = eq_mask(load(a + i), load(b + i));
        if (mask != 0xFFFFFFFFu) {
            const std::size_t lane = static_cast<std::size_t>(__builtin_ctz(~mask)) / 2;
            return a[i + lane] < b[i + lane] ? -1 : 1;
        }
    }
    return 0;
}

bool divides(const Exponent* a, const Exponent* b, std::size_t n) {
    for (std::size_t i = 0; i < n; i += kLanes) {
        const __m256i vb = load(b + i);
        if (eq_mask(_mm256_max_epu16(load(a + i), vb), vb) != 0xFFFFFFFFu) return false;
    }
    return true;
}

bool mul(const Exponent* a, const Exponent* b, Exponent* out, std::size_t n) {
    unsigned ok = 0xFFFFFFFFu;
    for (std::size_t i = 0; i < n; i += kLanes) {
        const __m256i va = load(a + i);
        const __m256i s = _mm256_add_epi16(va, load(b + i));
        // wrapped lanes are exactly those with s < a
        ok &= eq_mask(_mm256_max_epu16(s, va), s);
        store(out + i, s);
    }
    return ok == 0xFFFFFFFFu;
}

void quotient(const Exponent* a, const Exponent* b, Exponent* out, std::size_t n) {
    for (std::size_t i = 0; i < n; i += kLanes) store(out + i, _mm256_sub_epi16(load(b + i), load(a + i)));
}

void lcm(const Exponent* a, const Exponent* b, Exponent* out, std::size_t n) {
    for (std::size_t i = 0; i < n; i += kLanes) store(out + i, _mm256_max_epu16(load(a + i), load(b + i)));
}

bool coprime(const Exponent* a, const Exponent* b, std::size_t n) {
    const __m256i zero = _mm256_setzero_si256();
    for (std::size_t i = 0; i < n; i += kLanes) {
        if (eq_mask(_mm256_min_epu16(load(a + i), load(b + i)), zero) != 0xFFFFFFFFu) return false;
    }
    return true;
}

std::uint64_t degree(const Exponent* a, std::size_t n) {
    __m256i acc = _mm256_setzero_si256();
    for (std::size_t i = 0; i < n; i += kLanes) {
        const __m256i v = load(a + i);
        acc = _mm256_add_epi32(acc, _mm256_cvtepu16_epi32(_mm256_castsi256_si128(v)));
        acc = _mm256_add_epi32(acc, _mm256_cvtepu16_epi32(_mm256_extracti128_si256(v, 1)));
    }
    alignas(32) std::uint32_t lanes[8];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    std::uint64_t d = 0;
    for (std::uint32_t l : lanes) d += l;
    return d;
}

}  // namespace

const Kernels& avx2_kernels() {
    static const Kernels k{"avx2", lex_compare, divides, mul, quotient, lcm, coprime, degree};
    return k;
}

}  // namespace lexgb::simd::detail
