#include "doctest.h"

#include "skewlagrange/parse.hpp"
#include "skewlagrange/random_gen.hpp"

using skl::Quaternion;
using skl::Rational;
using QPoly = skl::SkewPoly<Quaternion>;

TEST_CASE("quaternion literals") {
    CHECK(skl::parse_quaternion("0") == Quaternion::zero());
    CHECK(skl::parse_quaternion("i") == Quaternion::unit_i());
    CHECK(skl::parse_quaternion("-i") == -Quaternion::unit_i());
    CHECK(skl::parse_quaternion("i-j") == Quaternion::unit_i() - Quaternion::unit_j());
    CHECK(skl::parse_quaternion("1+2i") ==
          Quaternion(Rational(1), Rational(2), Rational(0), Rational(0)));
    CHECK(skl::parse_quaternion("1 + 2*i") == skl::parse_quaternion("1+2i"));
    CHECK(skl::parse_quaternion("4/5+3/5*i+2/5*j-1/5*k") ==
          Quaternion(Rational(4, 5), Rational(3, 5), Rational(2, 5), Rational(-1, 5)));
    CHECK(skl::parse_quaternion("j + j") ==
          Quaternion(Rational(0), Rational(0), Rational(2), Rational(0)));
    CHECK(skl::parse_quaternion("-3/4") == Quaternion(Rational(-3, 4)));

    CHECK_THROWS_AS(skl::parse_quaternion(""), std::invalid_argument);
    CHECK_THROWS_AS(skl::parse_quaternion("1+"), std::invalid_argument);
    CHECK_THROWS_AS(skl::parse_quaternion("x"), std::invalid_argument);
    CHECK_THROWS_AS(skl::parse_quaternion("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(skl::parse_quaternion("*i"), std::invalid_argument);
    CHECK_THROWS_AS(skl::parse_quaternion("2i3"), std::invalid_argument);
    // whitespace is insignificant everywhere, even inside a number
    CHECK(skl::parse_quaternion("2 3") == Quaternion(23));
}

TEST_CASE("quaternion formatting") {
    CHECK(skl::format_quaternion(Quaternion::zero()) == "0");
    CHECK(skl::format_quaternion(Quaternion::unit_i()) == "i");
    CHECK(skl::format_quaternion(-Quaternion::unit_k()) == "-k");
    CHECK(skl::format_quaternion(Quaternion(Rational(-3, 5), Rational(-1, 5), Rational(1, 5),
                                            Rational(2, 5))) == "-3/5-1/5*i+1/5*j+2/5*k");
    CHECK(skl::format_quaternion(Quaternion(1) - Quaternion::unit_k()) == "1-k");
}

TEST_CASE("round trip on random values") {
    skl::RandomGen gen(101);
    for (int t = 0; t < 200; ++t) {
        Quaternion q = gen.quaternion();
        CHECK(skl::parse_quaternion(skl::format_quaternion(q)) == q);
    }
}

TEST_CASE("polynomial text form") {
    QPoly f(std::vector<Quaternion>{
        Quaternion(Rational(4, 5), Rational(3, 5), Rational(2, 5), Rational(-1, 5)),
        Quaternion(Rational(-3, 5), Rational(-1, 5), Rational(1, 5), Rational(2, 5))});
    CHECK(skl::format_poly(f) ==
          "(4/5+3/5*i+2/5*j-1/5*k) + (-3/5-1/5*i+1/5*j+2/5*k) z");
    CHECK(skl::parse_poly(skl::format_poly(f)) == f);

    CHECK(skl::format_poly(QPoly()) == "0");
    CHECK(skl::parse_poly("0").is_zero());
    CHECK(skl::parse_poly("(1) + (2) z^2") ==
          QPoly(std::vector<Quaternion>{Quaternion(1), Quaternion(0), Quaternion(2)}));
    CHECK(skl::parse_poly("i-j") == QPoly::constant(skl::parse_quaternion("i-j")));
    CHECK(skl::parse_poly("z") == QPoly::variable());
    CHECK(skl::parse_poly("(i) z - (j)") ==
          QPoly(std::vector<Quaternion>{-Quaternion::unit_j(), Quaternion::unit_i()}));
    CHECK_THROWS_AS(skl::parse_poly("(1"), std::invalid_argument);
    CHECK_THROWS_AS(skl::parse_poly("(1) q"), std::invalid_argument);
}

TEST_CASE("polynomial round trip on random values") {
    skl::RandomGen gen(102);
    for (int t = 0; t < 120; ++t) {
        QPoly f = gen.quaternion_poly(5);
        CHECK(skl::parse_poly(skl::format_poly(f)) == f);
        CHECK(skl::poly_from_strings(skl::poly_to_strings(f)) == f);
    }
}
