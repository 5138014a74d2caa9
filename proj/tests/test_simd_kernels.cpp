#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "lexgb/monomial.hpp"
#include "lexgb/simd/monomial_kernels.hpp"

using namespace lexgb::simd;

namespace {

std::vector<const Kernels*> vector_backends() {
    std::vector<const Kernels*> out;
    if (backend_available(Backend::avx2)) out.push_back(&kernels_for(Backend::avx2));
    return out;
}

// Exponent vectors that stress lane boundaries: mostly small, some equal
// prefixes, occasional values near the 16-bit limit.
std::vector<Exponent> random_exponents(std::mt19937_64& rng, std::size_t rank, const std::vector<Exponent>* base) {
    std::vector<Exponent> e(padded_length(rank), 0);
    std::uniform_int_distribution<int> small(0, 4);
    for (std::size_t i = 0; i < rank; ++i) {
        const int kind = static_cast<int>(rng() % 10);
        if (base && kind < 6)
            e[i] = (*base)[i];
        else if (kind == 9)
            e[i] = static_cast<Exponent>(0xFFFF - (rng() % 3));
        else
            e[i] = static_cast<Exponent>(small(rng));
    }
    return e;
}

}  // namespace

TEST_CASE("scalar kernels on hand values") {
    const Kernels& k = kernels_for(Backend::scalar);
    std::vector<Exponent> a(16, 0), b(16, 0), out(16, 0);
    a[0] = 1;
    b[1] = 5;
    CHECK(k.lex_compare(a.data(), b.data(), 16) > 0);
    CHECK(k.lex_compare(a.data(), a.data(), 16) == 0);
    CHECK_FALSE(k.divides(a.data(), b.data(), 16));
    CHECK(k.coprime(a.data(), b.data(), 16));
    k.lcm(a.data(), b.data(), out.data(), 16);
    CHECK(out[0] == 1);
    CHECK(out[1] == 5);
    CHECK(k.degree(out.data(), 16) == 6);
    CHECK(k.mul(a.data(), b.data(), out.data(), 16));
    a[3] = 0xFFFF;
    b[3] = 1;
    CHECK_FALSE(k.mul(a.data(), b.data(), out.data(), 16));
}

TEST_CASE("vector backends agree with the scalar reference") {
    const Kernels& ref = kernels_for(Backend::scalar);
    const auto backends = vector_backends();
    if (backends.empty()) {
        MESSAGE("no vector backend on this CPU; equivalence not exercised");
        return;
    }
    std::mt19937_64 rng(77);
    for (const Kernels* k : backends) {
        CAPTURE(k->name);
        for (std::size_t rank : {1u, 3u, 15u, 16u, 17u, 26u, 31u, 32u, 33u, 64u}) {
            const std::size_t n = padded_length(rank);
            for (int trial = 0; trial < 400; ++trial) {
                const auto a = random_exponents(rng, rank, nullptr);
                const auto b = random_exponents(rng, rank, &a);
                CHECK(k->lex_compare(a.data(), b.data(), n) == ref.lex_compare(a.data(), b.data(), n));
                CHECK(k->lex_compare(b.data(), a.data(), n) == ref.lex_compare(b.data(), a.data(), n));
                CHECK(k->divides(a.data(), b.data(), n) == ref.divides(a.data(), b.data(), n));
                CHECK(k->coprime(a.data(), b.data(), n) == ref.coprime(a.data(), b.data(), n));
                CHECK(k->degree(a.data(), n) == ref.degree(a.data(), n));

                std::vector<Exponent> o1(n), o2(n);
                CHECK(k->mul(a.data(), b.data(), o1.data(), n) == ref.mul(a.data(), b.data(), o2.data(), n));
                CHECK(o1 == o2);
                k->lcm(a.data(), b.data(), o1.data(), n);
                ref.lcm(a.data(), b.data(), o2.data(), n);
                CHECK(o1 == o2);
                if (ref.divides(a.data(), o2.data(), n)) {
                    std::vector<Exponent> q1(n), q2(n);
                    k->quotient(a.data(), o2.data(), q1.data(), n);
                    ref.quotient(a.data(), o2.data(), q2.data(), n);
                    CHECK(q1 == q2);
                }
            }
        }
    }
}

TEST_CASE("backend selection") {
    CHECK(backend_available(Backend::scalar));
    const Backend before = active_backend();
    select_backend(Backend::scalar);
    CHECK(active_backend() == Backend::scalar);
    CHECK(std::string(active().name) == "scalar");
    // monomial results do not depend on the backend
    auto m = lexgb::Monomial::from_exponents(std::vector<unsigned>{2, 0, 1});
    auto n = lexgb::Monomial::from_exponents(std::vector<unsigned>{1, 3, 1});
    const auto s_lcm = lcm(m, n);
    const auto s_cmp = lex_compare(m, n);
    if (backend_available(Backend::avx2)) {
        select_backend(Backend::avx2);
        CHECK(lcm(m, n) == s_lcm);
        CHECK(lex_compare(m, n) == s_cmp);
    } else {
        CHECK_THROWS(kernels_for(Backend::avx2));
    }
    select_backend(before);
}
