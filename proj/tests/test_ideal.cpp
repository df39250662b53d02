#include "doctest.h"

#include "skewlagrange/ideal.hpp"
#include "skewlagrange/oracle.hpp"
#include "skewlagrange/quaternion.hpp"
#include "skewlagrange/random_gen.hpp"

using skl::Quaternion;
using skl::Rational;
using QPoly = skl::SkewPoly<Quaternion>;

namespace {
const Quaternion I = Quaternion::unit_i();
const Quaternion J = Quaternion::unit_j();
const Quaternion K = Quaternion::unit_k();
const QPoly Z2P1(std::vector<Quaternion>{Quaternion(1), Quaternion(0), Quaternion(1)});
}  // namespace

TEST_CASE("lrcm of linear factors") {
    CHECK(skl::lrcm(QPoly::linear(I), QPoly::linear(J)) == Z2P1);
    CHECK(skl::lrcm(QPoly::linear(I), QPoly::linear(I)) == QPoly::linear(I));

    auto m = skl::lrcm(QPoly::linear(I), QPoly::linear(Quaternion(1) + J));
    CHECK(m.degree() == 2);
    CHECK(m.is_monic());
    CHECK(m.eval_left(I).is_zero());
    CHECK(m.eval_left(Quaternion(1) + J).is_zero());
    CHECK(skl::divide_left(m, QPoly::linear(I)).remainder.is_zero());
    CHECK(skl::divide_left(m, QPoly::linear(Quaternion(1) + J)).remainder.is_zero());
}

TEST_CASE("llcm mirror") {
    auto m = skl::llcm(QPoly::linear(I), QPoly::linear(J));
    CHECK(m == Z2P1);
    auto m2 = skl::llcm(QPoly::linear(I), QPoly::linear(Quaternion(1) + J));
    CHECK(m2.degree() == 2);
    CHECK(m2.eval_right(I).is_zero());
    CHECK(m2.eval_right(Quaternion(1) + J).is_zero());
    CHECK(skl::divide_right(m2, QPoly::linear(I)).remainder.is_zero());
}

namespace {

// Greatest common left divisor, used only as a test oracle: a common left
// divisor of f and g also left-divides the remainder of f = g q + r.
QPoly gcld(QPoly f, QPoly g) {
    while (!g.is_zero()) {
        auto r = skl::divide_left(f, g).remainder;
        f = std::move(g);
        g = std::move(r);
    }
    return f.scaled_right(f.lead().inverse());
}

}  // namespace

TEST_CASE("lrcm degree bound and coprimality") {
    skl::RandomGen gen(41);
    for (int t = 0; t < 25; ++t) {
        auto f = skl::minimal_poly_left(gen.p_independent_left(2)).poly;
        auto g = skl::minimal_poly_left(gen.p_independent_left(2)).poly;
        auto m = skl::lrcm(f, g);
        CHECK(m.degree() <= f.degree() + g.degree());
        CHECK(skl::divide_left(m, f).remainder.is_zero());
        CHECK(skl::divide_left(m, g).remainder.is_zero());
        // degree is additive exactly when f and g are left-coprime
        auto d = gcld(f, g);
        CHECK((m.degree() == f.degree() + g.degree()) == (d.degree() == 0));
        CHECK(m.degree() == f.degree() + g.degree() - d.degree());
    }
    // shared left factor: lrcm(z^2+1, z-k) = z^2+1, degree below the sum
    auto shared = skl::lrcm(Z2P1, QPoly::linear(K));
    CHECK(shared == Z2P1);
}

TEST_CASE("minimal polynomial of node sets") {
    auto mp = skl::minimal_poly_left(std::vector<Quaternion>{I, J});
    CHECK(mp.poly == Z2P1);
    CHECK(mp.basis == std::vector<std::size_t>{0, 1});

    // k is in the left zero set of z^2+1, so the basis stops at {i, j}
    auto mp3 = skl::minimal_poly_left(std::vector<Quaternion>{I, J, K});
    CHECK(mp3.poly == Z2P1);
    CHECK(mp3.basis == std::vector<std::size_t>{0, 1});

    auto mp1 = skl::minimal_poly_left(std::vector<Quaternion>{Quaternion(2)});
    CHECK(mp1.poly == QPoly::linear(Quaternion(2)));

    CHECK(skl::minimal_poly_left(std::vector<Quaternion>{}).poly == QPoly::one());
}

TEST_CASE("minimal polynomial left-vanishes on every node") {
    skl::RandomGen gen(42);
    for (int t = 0; t < 25; ++t) {
        std::vector<Quaternion> nodes;
        for (long u = 0, n = gen.integer(1, 5); u < n; ++u) nodes.push_back(gen.quaternion());
        auto mp = skl::minimal_poly_left(nodes);
        for (const auto& a : nodes) CHECK(skl::in_left_zero_set(mp.poly, a));
        CHECK(mp.poly.degree() == static_cast<long>(mp.basis.size()));
        // basis soundness: re-running on the basis reproduces the polynomial
        std::vector<Quaternion> basis_nodes;
        for (auto idx : mp.basis) basis_nodes.push_back(nodes[idx]);
        CHECK(skl::minimal_poly_left(basis_nodes).poly == mp.poly);
        // mirror
        auto mr = skl::minimal_poly_right(nodes);
        for (const auto& a : nodes) CHECK(skl::in_right_zero_set(mr.poly, a));
    }
}

TEST_CASE("zero set membership") {
    CHECK(skl::in_left_zero_set(Z2P1, K));
    CHECK(!skl::in_left_zero_set(QPoly::linear(I), J));
    CHECK(skl::in_right_zero_set(Z2P1, K));
}

TEST_CASE("P-independence") {
    CHECK(skl::is_p_independent_left(std::vector<Quaternion>{I, J}));
    CHECK(!skl::is_p_independent_left(std::vector<Quaternion>{I, J, K}));
    CHECK(skl::is_p_independent_left(std::vector<Quaternion>{}));
    CHECK(skl::is_p_independent_left(std::vector<Quaternion>{K}));

    // the criterion via deleted minimal polynomials
    skl::RandomGen gen(43);
    for (int t = 0; t < 20; ++t) {
        auto nodes = gen.p_independent_left(static_cast<std::size_t>(gen.integer(1, 4)));
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            std::vector<Quaternion> rest;
            for (std::size_t u = 0; u < nodes.size(); ++u)
                if (u != i) rest.push_back(nodes[u]);
            CHECK(!skl::minimal_poly_left(rest).poly.eval_left(nodes[i]).is_zero());
        }
    }
}

TEST_CASE("two same-class nodes have the central class polynomial") {
    skl::RandomGen gen(44);
    for (int t = 0; t < 20; ++t) {
        Quaternion a = gen.noncentral_quaternion();
        Quaternion b = gen.in_class_of(a);
        if (a == b) continue;
        auto mp = skl::minimal_poly_left(std::vector<Quaternion>{a, b});
        CHECK(mp.poly.is_central());
        CHECK(mp.poly == skl::embed_central<Quaternion>(skl::central_min_poly(a)));
    }
}

TEST_CASE("minimal polynomial degree equals oracle rank") {
    skl::RandomGen gen(45);
    for (int t = 0; t < 200; ++t) {
        std::vector<Quaternion> nodes;
        for (long u = 0, n = gen.integer(1, 5); u < n; ++u) {
            // mix fresh nodes and conjugates of previous ones to hit
            // dependent sets often
            if (!nodes.empty() && gen.coin())
                nodes.push_back(gen.in_class_of(nodes[static_cast<std::size_t>(
                    gen.integer(0, static_cast<long>(nodes.size()) - 1))]));
            else
                nodes.push_back(gen.quaternion());
        }
        bool distinct = true;
        for (std::size_t x = 0; x < nodes.size(); ++x)
            for (std::size_t y = x + 1; y < nodes.size(); ++y)
                if (nodes[x] == nodes[y]) distinct = false;
        if (!distinct) continue;

        auto mp = skl::minimal_poly_left(nodes);
        // rank of the homogeneous left-evaluation system at bound n equals
        // 4n - dim(nullspace); deg P = rank / 4
        skl::OracleProblem<Quaternion> hom;
        for (const auto& a : nodes) hom.left.push_back({a, Quaternion::zero()});
        auto sol = skl::oracle_interpolate(hom, static_cast<long>(nodes.size()));
        std::size_t rank = 4 * nodes.size() - sol.dimension();
        CHECK(static_cast<std::size_t>(mp.poly.degree()) * 4 == rank);
    }
}
