#pragma once

// Exponent-vector kernels used by Monomial. Exponents are uint16 lanes,
// stored in blocks of kLanes so every vector backend can load whole blocks
// without tail handling; padding lanes are always zero.
//
// Every backend must agree bit-for-bit with the scalar reference.

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace lexgb::simd {

using Exponent = std::uint16_t;

inline constexpr std::size_t kLanes = 16;  // one 256-bit register of uint16

inline constexpr std::size_t padded_length(std::size_t rank) {
    return ((rank + kLanes - 1) / kLanes) * kLanes;
}

/// Kernel table. `n` is always the padded length (a multiple of kLanes).
struct Kernels {
    const char* name;
    /// <0, 0, >0 for a <lex b, a == b, a >lex b (lane 0 most significant).
    int (*lex_compare)(const Exponent* a, const Exponent* b, std::size_t n);
    /// a_i <= b_i for all i.
    bool (*divides)(const Exponent* a, const Exponent* b, std::size_t n);
    /// out = a + b; returns false if any lane wrapped.
    bool (*mul)(const Exponent* a, const Exponent* b, Exponent* out, std::size_t n);
    /// out = b - a; requires divides(a, b).
    void (*quotient)(const Exponent* a, const Exponent* b, Exponent* out, std::size_t n);
    /// out = max(a, b).
    void (*lcm)(const Exponent* a, const Exponent* b, Exponent* out, std::size_t n);
    /// min(a_i, b_i) == 0 for all i.
    bool (*coprime)(const Exponent* a, const Exponent* b, std::size_t n);
    std::uint64_t (*degree)(const Exponent* a, std::size_t n);
};

enum class Backend { scalar, avx2 };

std::string_view backend_name(Backend b);
bool backend_available(Backend b);

/// Kernel table for a specific backend; throws if unavailable.
const Kernels& kernels_for(Backend b);

/// Active table. Chosen on first use: LEXGB_SIMD=scalar|avx2 if set,
/// otherwise the widest backend the CPU supports.
const Kernels& active();
Backend active_backend();

/// Switches the active backend. Not synchronized with concurrent kernel
/// users; intended for start-up and benchmarks.
void select_backend(Backend b);

namespace detail {
const Kernels& scalar_kernels();
#if defined(LEXGB_HAVE_AVX2_KERNELS)
const Kernels& avx2_kernels();
#endif
}  // namespace detail

}  // namespace lexgb::simd
