#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lexgb/polyio.hpp"
#include "oracles.hpp"

using namespace lexgb;

TEST_CASE("text output uses display names") {
    const Ring ring = coefficient_ring(3);
    const auto p = parse_polynomial("C3 - 1/3*y", ring);
    CHECK(to_text(p) == "C_{-3} - 1/3*y");
    CHECK(to_text(Polynomial(ring)) == "0");
    CHECK(to_text(parse_polynomial("-2*C1^2*y + 5", ring)) == "-2*C_{-1}^2*y + 5");
}

TEST_CASE("latex output") {
    const Ring ring = coefficient_ring(5);
    CHECK(to_latex(parse_polynomial("2C_{-5}+2C_{-3}C_{-1}+C_{-2}^2", ring)) == "2C_{-5}+2C_{-3}C_{-1}+C_{-2}^2");
    CHECK(to_latex(parse_polynomial("C1^2 + 2/3 y", ring)) == "C_{-1}^2+\\frac{2}{3}y");
    CHECK(to_latex(parse_polynomial("-C1^12", ring)) == "-C_{-1}^{12}");
}

TEST_CASE("parser accepts both spellings") {
    const Ring ring = coefficient_ring(5);
    const auto a = parse_polynomial("C_{-2}^2 + 2 C_{-1} C_{-3} + 2 C_{-5}", ring);
    const auto b = parse_polynomial("2*C5 + 2*C3*C1 + C2^2", ring);
    CHECK(a == b);
    CHECK(parse_polynomial("C1^{3}", ring) == parse_polynomial("C1*C1*C1", ring));
    CHECK(parse_polynomial("-y + y", ring).is_zero());
}

TEST_CASE("parser errors") {
    const Ring ring = coefficient_ring(2);
    CHECK_THROWS_AS(parse_polynomial("", ring), std::invalid_argument);
    CHECK_THROWS_AS(parse_polynomial("C9", ring), std::invalid_argument);
    CHECK_THROWS_AS(parse_polynomial("C1 +", ring), std::invalid_argument);
    CHECK_THROWS_AS(parse_polynomial("1/0", ring), std::invalid_argument);
    CHECK_THROWS_AS(parse_polynomial("C1 ^", ring), std::invalid_argument);
    CHECK_THROWS_AS(parse_polynomial("(C1)", ring), std::invalid_argument);
}

TEST_CASE("parse . print . parse is the identity") {
    const Ring ring = coefficient_ring(4);
    std::mt19937_64 rng(3);
    for (int i = 0; i < 300; ++i) {
        const auto p = oracle::random_polynomial(ring, rng, 6, 4);
        const auto once = parse_polynomial(to_text(p), ring);
        CHECK(once == p);
        CHECK(to_text(parse_polynomial(to_text(once), ring)) == to_text(p));
    }
}
