#include "doctest.h"

#include "skewlagrange/quaternion.hpp"
#include "skewlagrange/random_gen.hpp"
#include "skewlagrange/ring.hpp"

using skl::Quaternion;
using skl::Rational;

namespace {
const Quaternion I = Quaternion::unit_i();
const Quaternion J = Quaternion::unit_j();
const Quaternion K = Quaternion::unit_k();
}  // namespace

TEST_CASE("multiplication table") {
    CHECK(I * J == K);
    CHECK(J * K == I);
    CHECK(K * I == J);
    CHECK(J * I == -K);
    CHECK(K * J == -I);
    CHECK(I * K == -J);
    CHECK(I * I == Quaternion(-1));
}

TEST_CASE("two-sided inverse") {
    Quaternion q = I - J;
    Quaternion qi = q.inverse();
    CHECK(qi == Quaternion(Rational(0), Rational(-1, 2), Rational(1, 2), Rational(0)));
    CHECK(q * qi == Quaternion::one());
    CHECK(qi * q == Quaternion::one());
    CHECK_THROWS_AS(Quaternion::zero().inverse(), std::domain_error);

    skl::RandomGen gen(11);
    for (int t = 0; t < 50; ++t) {
        Quaternion a = gen.nonzero_quaternion();
        CHECK(a * a.inverse() == Quaternion::one());
        CHECK(a.inverse() * a == Quaternion::one());
    }
}

TEST_CASE("conjugation is an anti-automorphism and yields the norm") {
    skl::RandomGen gen(12);
    CHECK((Quaternion(1) + Quaternion(2) * I).conj() * (Quaternion(1) + Quaternion(2) * I) ==
          Quaternion(5));
    for (int t = 0; t < 50; ++t) {
        Quaternion a = gen.quaternion(), b = gen.quaternion();
        CHECK((a * b).conj() == b.conj() * a.conj());
        Quaternion n = a * a.conj();
        CHECK(n.is_central());
        CHECK(n.re() == a.norm());
    }
}

TEST_CASE("conjugacy test") {
    CHECK(I.same_class_as(J));
    CHECK(!I.same_class_as(Quaternion(1) + J));
    Quaternion h = Quaternion(1) + K;
    CHECK(I.same_class_as(h * I * h.inverse()));

    skl::RandomGen gen(13);
    for (int t = 0; t < 50; ++t) {
        Quaternion a = gen.quaternion();
        CHECK(a.same_class_as(gen.in_class_of(a)));
    }
}

TEST_CASE("minimal central polynomial") {
    auto p3 = Quaternion(3).central_min_poly_coeffs();
    CHECK(p3 == std::vector<Rational>{Rational(-3), Rational(1)});
    auto pi = I.central_min_poly_coeffs();
    CHECK(pi == std::vector<Rational>{Rational(1), Rational(0), Rational(1)});
    auto pj1 = (Quaternion(1) + J).central_min_poly_coeffs();
    CHECK(pj1 == std::vector<Rational>{Rational(2), Rational(-2), Rational(1)});

    // invariant across the class
    skl::RandomGen gen(14);
    for (int t = 0; t < 30; ++t) {
        Quaternion a = gen.quaternion();
        CHECK(a.central_min_poly_coeffs() == gen.in_class_of(a).central_min_poly_coeffs());
    }
}

TEST_CASE("intertwiner basis") {
    auto none = skl::intertwiner_basis(I, Quaternion(1) + J);
    CHECK(none.empty());

    auto two = skl::intertwiner_basis(I, J);
    REQUIRE(two.size() == 2);
    for (const auto& v : two) CHECK(I * v == v * J);
    CHECK(two[0] == I + J);
    CHECK(two[1] == Quaternion(1) - K);

    auto full = skl::intertwiner_basis(Quaternion(2), Quaternion(2));
    CHECK(full.size() == 4);

    skl::RandomGen gen(15);
    for (int t = 0; t < 20; ++t) {
        Quaternion a = gen.quaternion();
        Quaternion b = gen.in_class_of(a);
        for (const auto& v : skl::intertwiner_basis(a, b)) CHECK(a * v == v * b);
    }
}

TEST_CASE("conjugacy class data") {
    auto d = skl::ConjugacyClassData::of(Quaternion(1) + J);
    CHECK(d.trace == Rational(2));
    CHECK(d.norm == Rational(2));
    CHECK(d.kappa == 2);
    CHECK(skl::ConjugacyClassData::of(Quaternion(7)).kappa == 1);
}

TEST_CASE("coordinate embedding round trip") {
    skl::RandomGen gen(16);
    for (int t = 0; t < 20; ++t) {
        Quaternion a = gen.quaternion();
        CHECK(Quaternion::from_coords(a.coords()) == a);
        // regular representation realizes multiplication
        Quaternion b = gen.quaternion();
        auto lm = skl::left_mul_matrix(a);
        auto bc = b.coords();
        std::vector<Rational> prod(4);
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) prod[r] += lm.at(r, c) * bc[c];
        CHECK(Quaternion::from_coords(prod) == a * b);
    }
}
