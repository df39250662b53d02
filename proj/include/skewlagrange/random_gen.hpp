#pragma once

// Deterministic random instance streams for the property suites. Heights
// are kept small so that exact arithmetic stays fast through the oracle's
// row reduction.

#include "skewlagrange/ideal.hpp"
#include "skewlagrange/quaternion.hpp"
#include "skewlagrange/skew_poly.hpp"

#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

namespace skl {

inline std::uint64_t default_seed() {
    if (const char* env = std::getenv("SKEWLAGRANGE_SEED")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0') return static_cast<std::uint64_t>(v);
    }
    return 0x5eed5eedULL;
}

class RandomGen {
public:
    explicit RandomGen(std::uint64_t seed = default_seed(), long height = 10)
        : rng_(seed), height_(height) {}

    long integer(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(rng_);
    }
    bool coin() { return integer(0, 1) == 1; }

    Rational rational() { return Rational(integer(-height_, height_), integer(1, height_)); }
    Rational nonzero_rational() {
        for (;;) {
            Rational r = rational();
            if (!r.is_zero()) return r;
        }
    }

    Quaternion quaternion() { return {rational(), rational(), rational(), rational()}; }
    Quaternion nonzero_quaternion() {
        for (;;) {
            Quaternion q = quaternion();
            if (!q.is_zero()) return q;
        }
    }
    Quaternion noncentral_quaternion() {
        for (;;) {
            Quaternion q = quaternion();
            if (!q.is_central()) return q;
        }
    }

    // h a h^{-1} for random h != 0: a fresh member of [a].
    Quaternion in_class_of(const Quaternion& a) {
        Quaternion h = nonzero_quaternion();
        return h * a * h.inverse();
    }

    template <class Ring>
    SkewPoly<Ring> poly(long max_degree, Ring (RandomGen::*draw)()) {
        std::vector<Ring> coeffs;
        long deg = integer(0, max_degree);
        for (long t = 0; t <= deg; ++t) coeffs.push_back((this->*draw)());
        return SkewPoly<Ring>(std::move(coeffs));
    }
    SkewPoly<Quaternion> quaternion_poly(long max_degree) {
        return poly<Quaternion>(max_degree, &RandomGen::quaternion);
    }
    SkewPoly<Quaternion> nonzero_quaternion_poly(long max_degree) {
        for (;;) {
            auto f = quaternion_poly(max_degree);
            if (!f.is_zero()) return f;
        }
    }
    SkewPoly<Rational> rational_poly(long max_degree) {
        return poly<Rational>(max_degree, &RandomGen::rational);
    }

    // Rejection sampling: grows a set one node at a time, keeping only
    // candidates that preserve P-independence (and distinctness).
    std::vector<Quaternion> p_independent_left(std::size_t n) {
        std::vector<Quaternion> nodes;
        while (nodes.size() < n) {
            nodes.push_back(quaternion());
            if (!is_p_independent_left(nodes)) nodes.pop_back();
        }
        return nodes;
    }
    std::vector<Quaternion> p_independent_right(std::size_t n) {
        std::vector<Quaternion> nodes;
        while (nodes.size() < n) {
            nodes.push_back(quaternion());
            if (!is_p_independent_right(nodes)) nodes.pop_back();
        }
        return nodes;
    }

    std::vector<Rational> distinct_rationals(std::size_t n) {
        std::vector<Rational> out;
        while (out.size() < n) {
            Rational r = rational();
            bool dup = false;
            for (const auto& x : out) dup = dup || x == r;
            if (!dup) out.push_back(r);
        }
        return out;
    }

private:
    std::mt19937_64 rng_;
    long height_;
};

}  // namespace skl
