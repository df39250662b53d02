#include "doctest.h"

#include "skewlagrange/oracle.hpp"
#include "skewlagrange/quaternion.hpp"
#include "skewlagrange/random_gen.hpp"
#include "skewlagrange/sylvester.hpp"

using skl::Quaternion;
using skl::Rational;
using skl::SylvesterStatus;

namespace {
const Quaternion I = Quaternion::unit_i();
const Quaternion J = Quaternion::unit_j();
const Quaternion K = Quaternion::unit_k();
}  // namespace

TEST_CASE("unique case: i x - x (1+j) = 1") {
    auto sol = skl::solve_sylvester(I, Quaternion(1) + J, Quaternion(1));
    REQUIRE(sol.status == SylvesterStatus::Unique);
    CHECK(*sol.particular ==
          Quaternion(Rational(-3, 5), Rational(-1, 5), Rational(1, 5), Rational(2, 5)));
    CHECK(sol.basis.empty());
}

TEST_CASE("unsolvable conjugate case: i x - x j = k") {
    auto sol = skl::solve_sylvester(I, J, K);
    CHECK(sol.status == SylvesterStatus::Unsolvable);
    CHECK(!sol.particular.has_value());
    auto oracle = skl::oracle_sylvester(I, J, K);
    CHECK(!oracle.solvable());
}

TEST_CASE("affine conjugate case: i x - x j = i - j") {
    auto sol = skl::solve_sylvester(I, J, I - J);
    REQUIRE(sol.status == SylvesterStatus::Affine);
    // x = 1 solves; the computed particular differs from it by an intertwiner
    CHECK(I * Quaternion(1) - Quaternion(1) * J == I - J);
    Quaternion diff = *sol.particular - Quaternion(1);
    CHECK(I * diff == diff * J);
    REQUIRE(sol.basis.size() == 2);
    for (const auto& v : sol.basis) CHECK(I * v == v * J);
}

TEST_CASE("solvability check") {
    CHECK(skl::solvability_check(I, J, I - J));
    CHECK(!skl::solvability_check(I, J, Quaternion(1)));
    CHECK(skl::solvability_check(I, I, Quaternion(0)));
    CHECK_THROWS_AS(skl::solvability_check(I, Quaternion(1) + J, Quaternion(1)),
                    std::domain_error);
}

TEST_CASE("central degenerate branch") {
    auto sol = skl::solve_sylvester(Quaternion(2), Quaternion(2), Quaternion(0));
    REQUIRE(sol.status == SylvesterStatus::Affine);
    CHECK(sol.particular->is_zero());
    CHECK(sol.basis.size() == 4);
    CHECK(skl::solve_sylvester(Quaternion(2), Quaternion(2), Quaternion(1)).status ==
          SylvesterStatus::Unsolvable);
}

TEST_CASE("closed form agrees with the oracle") {
    skl::RandomGen gen(61);
    int uniques = 0, affines = 0, unsolvables = 0;
    for (int t = 0; t < 200; ++t) {
        Quaternion a = gen.quaternion();
        Quaternion b = gen.coin() ? gen.in_class_of(a) : gen.quaternion();
        Quaternion x0 = gen.quaternion();
        Quaternion g = gen.coin() ? gen.quaternion() : a * x0 - x0 * b;  // mixed bag
        auto sol = skl::solve_sylvester(a, b, g);
        auto oracle = skl::oracle_sylvester(a, b, g);
        CHECK(sol.solvable() == oracle.solvable());
        switch (sol.status) {
            case SylvesterStatus::Unique: {
                ++uniques;
                CHECK(oracle.dimension() == 0);
                CHECK(Quaternion::from_coords(*oracle.particular) == *sol.particular);
                // alternative route through the right node's class polynomial
                CHECK(skl::sylvester_unique_alt(a, b, g) == *sol.particular);
                break;
            }
            case SylvesterStatus::Affine: {
                ++affines;
                CHECK(oracle.dimension() == sol.basis.size());
                Quaternion diff = *sol.particular - Quaternion::from_coords(*oracle.particular);
                CHECK(a * diff == diff * b);
                break;
            }
            case SylvesterStatus::Unsolvable: ++unsolvables; break;
        }
    }
    CHECK(uniques > 0);
    CHECK(affines > 0);
    CHECK(unsolvables > 0);
}

TEST_CASE("linearity of the unique solution map") {
    skl::RandomGen gen(62);
    for (int t = 0; t < 40; ++t) {
        Quaternion a = gen.quaternion(), b = gen.quaternion();
        if (a.same_class_as(b)) continue;
        Quaternion g1 = gen.quaternion(), g2 = gen.quaternion();
        CHECK(skl::sylvester_unique(a, b, g1 + g2) ==
              skl::sylvester_unique(a, b, g1) + skl::sylvester_unique(a, b, g2));
    }
}

TEST_CASE("batch matrix form") {
    std::vector<Quaternion> lambda{I}, omega{Quaternion(1) + J};
    auto batch = skl::batch_sylvester(lambda, omega, std::vector<Quaternion>{Quaternion(1)},
                                     std::vector<Quaternion>{Quaternion(0)});
    REQUIRE(batch.size() == 1);
    REQUIRE(batch[0].size() == 1);
    CHECK(batch[0][0].status == SylvesterStatus::Unique);
    CHECK(*batch[0][0].particular ==
          Quaternion(Rational(-3, 5), Rational(-1, 5), Rational(1, 5), Rational(2, 5)));

    // gamma = 0 off-class gives x = 0
    std::vector<Quaternion> lam2{I, Quaternion(2)}, om2{Quaternion(1) + J, Quaternion(3) + K};
    std::vector<Quaternion> cc{Quaternion(5), Quaternion(5)}, dd{Quaternion(5), Quaternion(5)};
    auto b2 = skl::batch_sylvester(lam2, om2, cc, dd);
    for (const auto& row : b2)
        for (const auto& e : row) {
            REQUIRE(e.status == SylvesterStatus::Unique);
            CHECK(e.particular->is_zero());
        }

    // inconsistent targets propagate per entry
    auto b3 = skl::batch_sylvester(std::vector<Quaternion>{I}, std::vector<Quaternion>{J},
                                   std::vector<Quaternion>{Quaternion(1)},
                                   std::vector<Quaternion>{Quaternion(0)});
    CHECK(b3[0][0].status == SylvesterStatus::Unsolvable);
}
