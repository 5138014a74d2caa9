#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "lexgb/closed_form.hpp"
#include "lexgb/groebner.hpp"
#include "lexgb/polyio.hpp"
#include "lexgb/systems.hpp"
#include "oracles.hpp"

using namespace lexgb;

namespace {
Polynomial P(const Ring& ring, const char* text) { return parse_polynomial(text, ring); }

IdealBasis B(const Ring& ring, std::initializer_list<const char*> texts) {
    std::vector<Polynomial> gens;
    for (const char* t : texts) gens.push_back(P(ring, t));
    return IdealBasis(ring, std::move(gens));
}

IdealBasis gold_r1(const Ring& ring) { return B(ring, {"C3 - 1/3 y", "C2", "C1^2 + 2/3 y"}); }
}  // namespace

TEST_CASE("s-polynomial") {
    const Ring ring = special_ring(2);
    const auto g = closed_form_basis(2);
    const auto& e2 = g[1];
    const auto& e3 = g[2];
    CHECK(s_polynomial(e2, e3) == P(ring, "1/2 C1^2 C4"));
    CHECK(s_polynomial(e3, e2) == P(ring, "-1/2 C1^2 C4"));
    CHECK(s_polynomial(g[0], g[2]).is_zero());
    CHECK_THROWS_AS(s_polynomial(e2, Polynomial(ring)), std::domain_error);

    std::mt19937_64 rng(5);
    for (int i = 0; i < 50; ++i) {
        const auto f = oracle::random_polynomial(ring, rng, 4, 2);
        const auto h = oracle::random_polynomial(ring, rng, 4, 2);
        if (f.is_zero() || h.is_zero()) continue;
        CHECK((s_polynomial(f, h) + s_polynomial(h, f)).is_zero());
        // the leading terms cancel
        const auto s = s_polynomial(f, h);
        if (!s.is_zero()) {
            const auto l = lcm(f.leading_monomial(), h.leading_monomial());
            CHECK(lex_compare(s.leading_monomial(), l) < 0);
        }
    }
}

TEST_CASE("buchberger on the r = 1 system") {
    const auto sys = build_special_system(1);
    BuchbergerLog log;
    const auto gb = buchberger(sys, {}, &log);
    CHECK(is_groebner(gb).ok);
    CHECK(log.basis_size == gb.size());
    CHECK(log.pairs_considered >= log.reductions);
    CHECK(interreduce(gb) == gold_r1(sys.ring()));
    CHECK(reduced_groebner_basis(sys) == gold_r1(sys.ring()));
}

TEST_CASE("small ideals") {
    const Ring ring = coefficient_ring(3);
    const auto gb = reduced_groebner_basis(B(ring, {"C2 C1", "C2 y"}));
    CHECK(gb == B(ring, {"C2 C1", "C2 y"}));
    CHECK_FALSE(is_groebner(B(ring, {"C3 + C1^2", "C3 + y"})).ok);
    const auto check = is_groebner(B(ring, {"C3 + C1^2", "C3 + y"}));
    REQUIRE(check.witness.has_value());
    CHECK(check.witness->remainder == P(ring, "C1^2 - y"));
    CHECK(reduced_groebner_basis(B(ring, {"C3 + C1^2", "C3 + y"})) == B(ring, {"C3 + y", "C1^2 - y"}));
    CHECK(interreduce(B(ring, {"2 C2"})) == B(ring, {"C2"}));
    CHECK_THROWS_AS(buchberger(IdealBasis(ring, {})), std::invalid_argument);
    CHECK_THROWS_AS(interreduce(B(ring, {"C3 + C1^2", "C3 + y"})), std::invalid_argument);
    // the unit ideal
    CHECK(reduced_groebner_basis(B(ring, {"C1", "C1 + 1"})) == B(ring, {"1"}));
}

TEST_CASE("interreduce is idempotent and independent of generator order") {
    for (int r = 1; r <= 4; ++r) {
        const auto sys = build_special_system(r);
        const auto gb = buchberger(sys);
        const auto red = interreduce(gb);
        CHECK(interreduce(red) == red);
        std::vector<Polynomial> shuffled(gb.gens().begin(), gb.gens().end());
        std::mt19937_64 rng(static_cast<unsigned>(r));
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        CHECK(interreduce(IdealBasis(sys.ring(), shuffled)) == red);
        for (const auto& g : red.gens()) CHECK(g.leading_coeff().is_one());
    }
}

TEST_CASE("strategy and criterion do not change the reduced basis") {
    for (int r = 1; r <= 4; ++r) {
        const auto sys = build_special_system(r);
        const auto ref = reduced_groebner_basis(sys);
        for (auto strategy : {PairStrategy::normal, PairStrategy::fifo}) {
            for (bool coprime : {true, false}) {
                BuchbergerOptions opts;
                opts.pair_strategy = strategy;
                opts.use_coprime_criterion = coprime;
                BuchbergerLog log;
                const auto gb = buchberger(sys, opts, &log);
                CHECK(is_groebner(gb).ok);
                CHECK(interreduce(gb) == ref);
                if (!coprime) CHECK(log.pairs_skipped_coprime == 0);
            }
        }
    }
    CHECK(parse_strategy("fifo") == PairStrategy::fifo);
    CHECK(strategy_name(PairStrategy::normal) == "normal");
    CHECK_THROWS_AS(parse_strategy("sugar"), std::invalid_argument);
}

TEST_CASE("general systems yield Groebner bases") {
    for (auto [n, m] : {std::pair{2, 3}, {3, 2}, {3, 4}, {2, 5}, {3, 5}}) {
        CAPTURE(n);
        CAPTURE(m);
        const auto sys = build_general_system(SystemSpec::with_leading_weight(n, m));
        const auto red = reduced_groebner_basis(sys);
        CHECK(is_groebner(red).ok);
        CHECK(ideal_equal(red, sys));
    }
}

TEST_CASE("ideal equality") {
    const Ring ring = coefficient_ring(3);
    CHECK_FALSE(ideal_equal(B(ring, {"C2"}), B(ring, {"C2^2"})));
    CHECK(ideal_equal(B(ring, {"C2", "C1"}), B(ring, {"C1 + C2", "C1 - C2"})));
    CHECK(ideal_equal(build_special_system(1), closed_form_basis(1)));
    CHECK_FALSE(ideal_equal(build_special_system(2), closed_form(ClosedFormParams::exact(2)).prefix(4)));
    CHECK_THROWS(ideal_equal(B(ring, {"C2"}), closed_form_basis(2)));
    CHECK(contained_in(B(ring, {"C2^2 y"}), B(ring, {"C2"})));
    CHECK_FALSE(contained_in(B(ring, {"C2 + 1"}), B(ring, {"C2"})));
}

TEST_CASE("step limit") {
    BuchbergerOptions opts;
    opts.max_reduction_steps = 3;
    CHECK_THROWS_AS(buchberger(build_special_system(3), opts), StepLimitExceeded);
}
