#include "doctest.h"

#include "skewlagrange/rational.hpp"

using skl::Rational;

TEST_CASE("canonical form") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(3, -9).denominator() == 3);
    CHECK(Rational(3, -9).numerator() == -1);
}

TEST_CASE("exact arithmetic") {
    Rational a(1, 3), b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(2));
    CHECK(a.inverse() == Rational(3));
    CHECK((-a) + a == Rational(0));
    CHECK_THROWS_AS(Rational(1).operator/(Rational(0)), std::domain_error);
    CHECK_THROWS_AS(Rational(0).inverse(), std::domain_error);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("ordering") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(5).sign() == 1);
    CHECK(Rational(-5, 7).sign() == -1);
    CHECK(Rational(0).sign() == 0);
}

TEST_CASE("parse and print") {
    CHECK(*Rational::parse("3/4") == Rational(3, 4));
    CHECK(*Rational::parse("-3/4") == Rational(-3, 4));
    CHECK(*Rational::parse("+7") == Rational(7));
    CHECK(*Rational::parse("6/4") == Rational(3, 2));
    CHECK(!Rational::parse("3/0").has_value());
    CHECK(!Rational::parse("").has_value());
    CHECK(!Rational::parse("1/2/3").has_value());
    CHECK(!Rational::parse("x").has_value());
    CHECK(Rational(-3, 4).str() == "-3/4");
    CHECK(Rational(5).str() == "5");
}

TEST_CASE("factorials and binomials") {
    CHECK(skl::factorial(0) == Rational(1));
    CHECK(skl::factorial(5) == Rational(120));
    CHECK(skl::binomial(4, 2) == Rational(6));
    CHECK(skl::binomial(3, 5) == Rational(0));
}
