#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "lexgb/rational.hpp"

using lexgb::BigInt;
using lexgb::Rational;

TEST_CASE("canonical form") {
    CHECK(Rational(6, 4).to_string() == "3/2");
    CHECK(Rational(6, -4).to_string() == "-3/2");
    CHECK(Rational(0, -7).to_string() == "0");
    CHECK(Rational(0, -7).denominator() == 1);
    CHECK(Rational(4, 2).to_string() == "2");
    CHECK(Rational(-4, 2).is_integer());
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("parse") {
    CHECK(Rational::parse("-3/6") == Rational(-1, 2));
    CHECK(Rational::parse("+5") == Rational(5));
    CHECK(Rational::parse("123456789012345678901234567890/10").to_string() == "12345678901234567890123456789");
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/-2"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/0"), std::domain_error);
}

TEST_CASE("arithmetic and errors") {
    const Rational a(1, 2), b(1, 3);
    CHECK(a + b == Rational(5, 6));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 6));
    CHECK(a / b == Rational(3, 2));
    CHECK(-a == Rational(-1, 2));
    CHECK(Rational(-2, 3).abs() == Rational(2, 3));
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK(a < Rational(2, 3));
    CHECK_THROWS_AS(a / Rational(0), std::domain_error);
    CHECK_THROWS_AS(Rational(0).inverse(), std::domain_error);
    std::ostringstream os;
    os << Rational(-7, 21);
    CHECK(os.str() == "-1/3");
}

TEST_CASE("exactness on random inputs") {
    std::mt19937_64 rng(20240611);
    std::uniform_int_distribution<long> d(-1000000, 1000000);
    for (int i = 0; i < 2000; ++i) {
        long den_a = d(rng), den_b = d(rng);
        if (den_a == 0) den_a = 1;
        if (den_b == 0) den_b = -1;
        const Rational a(d(rng), den_a), b(d(rng), den_b);
        CHECK((a + b) - b == a);
        if (!b.is_zero()) CHECK((a * b) / b == a);
        CHECK(Rational::parse(a.to_string()) == a);
        CHECK(a.denominator() > 0);
    }
}
