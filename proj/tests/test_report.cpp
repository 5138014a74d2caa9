#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lexgb/closed_form.hpp"
#include "lexgb/report.hpp"
#include "lexgb/sequences.hpp"
#include "lexgb/systems.hpp"

using namespace lexgb;

TEST_CASE("claim keys round-trip") {
    for (Claim c : kAllClaims) CHECK(claim_from_key(claim_key(c)) == c);
    CHECK(claim_key(Claim::groebner_full) == "thm-proposicion10");
    CHECK_THROWS_AS(claim_from_key("nope"), std::invalid_argument);
}

TEST_CASE("every claim holds for r = 1..3") {
    for (int r = 1; r <= 3; ++r) {
        CAPTURE(r);
        const auto rep = verify_all(r);
        CHECK(rep.r == r);
        REQUIRE(rep.checks.size() == kAllClaims.size());
        for (const auto& c : rep.checks) {
            CAPTURE(claim_key(c.claim));
            CHECK(c.result.pass);
            CHECK(c.result.witness.empty());
        }
        CHECK(rep.all_pass());
        REQUIRE(rep.reduced_basis.has_value());
        CHECK(*rep.reduced_basis == expected_reduced_basis(r));
    }
}

TEST_CASE("seeded cross-check agrees") {
    const auto rep = verify_all(3, VerifyOptions{12345});
    CHECK(rep.all_pass());
}

TEST_CASE("tilde construction and central reduction for r = 1..5") {
    for (int r = 1; r <= 5; ++r) {
        CAPTURE(r);
        CHECK(verify_tilde_construction(r).pass);
        CHECK(verify_central(r).pass);
    }
}

TEST_CASE("perturbed lambda is caught") {
    for (int t = 1; t <= 2; ++t) {
        CAPTURE(t);
        auto p = ClosedFormParams::exact(2);
        p.lambdas[static_cast<std::size_t>(t)] += Rational(1);
        const auto rep = verify_all(p);
        CHECK_FALSE(rep.all_pass());
        CHECK_FALSE(rep.at(Claim::cross_buchberger).pass);
        CHECK_FALSE(rep.at(Claim::cross_buchberger).witness.empty());
        CHECK_FALSE(rep.at(Claim::ideal_full_equal).pass);
        CHECK_FALSE(rep.at(Claim::even_generators).pass);
        // a perturbed basis of this shape is still Groebner
        CHECK(rep.at(Claim::groebner_full).pass);
    }
}

TEST_CASE("perturbed mu is caught") {
    auto p = ClosedFormParams::exact(2);
    p.mu += Rational(1);
    const auto rep = verify_all(p);
    CHECK_FALSE(rep.at(Claim::central_reduction).pass);
    CHECK_FALSE(rep.at(Claim::cross_buchberger).pass);
    CHECK_FALSE(rep.at(Claim::ideal_full_equal).pass);
    CHECK(rep.at(Claim::even_generators).pass);
}

TEST_CASE("cross check witness on a wrong candidate") {
    const auto sys = build_special_system(1);
    const auto wrong = closed_form_basis(2);
    const auto mismatch = cross_check(sys, wrong);
    CHECK_FALSE(mismatch.pass);
    CHECK(mismatch.witness.rfind("exception:", 0) == 0);
    auto p = ClosedFormParams::exact(1);
    p.mu = Rational(7);
    const auto res = cross_check(sys, closed_form(p).full());
    CHECK_FALSE(res.pass);
    CHECK_FALSE(res.witness.empty());
}
