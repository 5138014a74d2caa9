#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "lexgb/simd/monomial_kernels.hpp"

namespace lexgb::simd {

namespace {

bool cpu_has_avx2() {
#if defined(LEXGB_HAVE_AVX2_KERNELS) && (defined(__GNUC__) || defined(__clang__))
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

Backend initial_backend() {
    if (const char* env = std::getenv("LEXGB_SIMD")) {
        const std::string want(env);
        if (want == "scalar") return Backend::scalar;
        if (want == "avx2" && backend_available(Backend::avx2)) return Backend::avx2;
    }
    return backend_available(Backend::avx2) ? Backend::avx2 : Backend::scalar;
}

struct ActiveSlot {
    std::atomic<const Kernels*> table;
    std::atomic<Backend> backend;
    ActiveSlot() {
        const Backend b = initial_backend();
        backend.store(b);
        table.store(&kernels_for(b));
    }
};

ActiveSlot& slot() {
    static ActiveSlot s;
    return s;
}

}  // namespace

std::string_view backend_name(Backend b) { return b == Backend::avx2 ? "avx2" : "scalar"; }

bool backend_available(Backend b) {
    if (b == Backend::scalar) return true;
    static const bool avx2 = cpu_has_avx2();
    return avx2;
}

const Kernels& kernels_for(Backend b) {
    switch (b) {
    case Backend::scalar:
        return detail::scalar_kernels();
    case Backend::avx2:
#if defined(LEXGB_HAVE_AVX2_KERNELS)
        if (backend_available(Backend::avx2)) return detail::avx2_kernels();
#endif
        break;
    }
    throw std::runtime_error("SIMD backend '" + std::string(backend_name(b)) + "' is not available on this CPU");
}

const Kernels& active() { return *slot().table.load(std::memory_order_relaxed); }

Backend active_backend() { return slot().backend.load(std::memory_order_relaxed); }

void select_backend(Backend b) {
    const Kernels& k = kernels_for(b);
    slot().table.store(&k);
    slot().backend.store(b);
}

}  // namespace lexgb::simd
