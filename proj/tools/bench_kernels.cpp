// Times the reduction-heavy paths under every available SIMD backend.
#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "lexgb/groebner.hpp"
#include "lexgb/report.hpp"
#include "lexgb/systems.hpp"

int main(int argc, char** argv) {
    const int r = argc > 1 ? std::atoi(argv[1]) : 5;
    using lexgb::simd::Backend;
    for (Backend b : {Backend::scalar, Backend::avx2}) {
        if (!lexgb::simd::backend_available(b)) continue;
        lexgb::simd::select_backend(b);
        const auto t0 = std::chrono::steady_clock::now();
        const auto system = lexgb::build_special_system(r);
        const auto t1 = std::chrono::steady_clock::now();
        const auto gb = lexgb::reduced_groebner_basis(system);
        const auto t2 = std::chrono::steady_clock::now();
        const auto central = lexgb::verify_central(r);
        const auto t3 = std::chrono::steady_clock::now();
        auto ms = [](auto a, auto c) { return std::chrono::duration<double, std::milli>(c - a).count(); };
        std::printf("%-7s r=%d  system %.1f ms  buchberger %.1f ms (%zu gens)  central %.1f ms (%s)\n",
                    lexgb::simd::active().name, r, ms(t0, t1), ms(t1, t2), gb.size(), ms(t2, t3),
                    central.pass ? "pass" : "FAIL");
    }
    return 0;
}
