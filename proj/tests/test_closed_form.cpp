#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lexgb/closed_form.hpp"
#include "lexgb/groebner.hpp"
#include "lexgb/polyio.hpp"
#include "lexgb/sequences.hpp"
#include "lexgb/systems.hpp"

using namespace lexgb;

namespace {
Polynomial P(const Ring& ring, const char* text) { return parse_polynomial(text, ring); }
}  // namespace

TEST_CASE("r = 1") {
    const auto g = closed_form_basis(1);
    const Ring& ring = g.ring();
    REQUIRE(g.size() == 3);
    CHECK(g[0] == P(ring, "C2"));
    CHECK(g[1] == P(ring, "C3 + 1/2 C1^2"));
    CHECK(g[2] == P(ring, "3/2 C1^2 + y"));
    CHECK(expected_reduced_basis(1).gens()[0] == P(ring, "C3 - 1/3 y"));
}

TEST_CASE("r = 2 generators") {
    const auto cf = closed_form(ClosedFormParams::exact(2));
    const Ring& ring = cf.last.ring();
    CHECK(cf.tilde(1) == P(ring, "C2"));
    CHECK(cf.tilde(2) == P(ring, "C3 + 1/2 C1^2"));
    CHECK(cf.tilde(3) == P(ring, "C4"));
    CHECK(cf.tilde(4) == P(ring, "C5 - 1/2 C1^3"));
    CHECK(cf.tilde(5) == P(ring, "5/2 C1^3 + y"));
    CHECK_THROWS_AS(cf.tilde(6), std::out_of_range);
    CHECK(cf.prefix(4).size() == 4);
    CHECK(cf.full() == closed_form_basis(2));
}

TEST_CASE("parameters") {
    const auto p = ClosedFormParams::exact(3);
    CHECK(p.lambdas.size() == 4);
    CHECK(p.lambdas[3] == lambda_j(3));
    CHECK(p.mu == mu_r(3));
    auto bad = p;
    bad.mu = Rational(0);
    CHECK_THROWS_AS(closed_form(bad), std::invalid_argument);
    bad = p;
    bad.lambdas.pop_back();
    CHECK_THROWS_AS(closed_form(bad), std::invalid_argument);
    CHECK_THROWS_AS(ClosedFormParams::exact(0), std::invalid_argument);
}

TEST_CASE("expected reduced basis equals interreduced closed form and Buchberger output") {
    for (int r = 1; r <= 6; ++r) {
        CAPTURE(r);
        const auto g = closed_form_basis(r);
        CHECK(is_groebner(g).ok);
        CHECK(interreduce(g) == expected_reduced_basis(r));
        CHECK(reduced_groebner_basis(build_special_system(r)) == expected_reduced_basis(r));
    }
}

TEST_CASE("perturbed coefficients keep a Groebner basis but change the ideal") {
    auto p = ClosedFormParams::exact(2);
    p.lambdas[1] += Rational(1);
    const auto g = closed_form(p).full();
    CHECK(is_groebner(g).ok);
    CHECK_FALSE(ideal_equal(g, build_special_system(2)));
}
