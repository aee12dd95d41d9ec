#include <doctest.h>

#include "wmcs/rational.hpp"

using wmcs::Rational;

TEST_CASE("rational normalization and arithmetic") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK((Rational(1, 2) * Rational(2, 3)) == Rational(1, 3));
    CHECK((Rational(1, 2) - Rational(3, 4)) == Rational(-1, 4));
    CHECK((Rational(5) / Rational(1, 2)) == Rational(10));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(0));
}

TEST_CASE("rational parse and print round-trip") {
    CHECK(Rational::parse("3/4") == Rational(3, 4));
    CHECK(Rational::parse("-3/4") == Rational(-3, 4));
    CHECK(Rational::parse("7") == Rational(7));
    CHECK(Rational(3, 4).str() == "3/4");
    CHECK(Rational(-6, 8).str() == "-3/4");
    CHECK(Rational(5).str() == "5");
    CHECK_THROWS_AS(Rational::parse("x"), wmcs::SchemaError);
    CHECK_THROWS_AS(Rational::parse("1/0"), wmcs::OverflowError);
    CHECK_THROWS_AS(Rational::parse(""), wmcs::SchemaError);
}

TEST_CASE("rational overflow is detected, not wrapped") {
    Rational big(INT64_MAX / 2, 1);
    CHECK_THROWS_AS(big * Rational(8), wmcs::OverflowError);
}

TEST_CASE("exact ties") {
    // 1/3 + 1/3 + 1/3 is exactly one
    Rational third(1, 3);
    CHECK(third + third + third == Rational(1));
}
