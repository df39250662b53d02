#pragma once

// The division-ring element contract that the interpolation machinery is
// written against, plus the coordinate tooling shared by every brute-force
// route: regular-representation matrices and intertwiner spaces.
//
// Contract, beyond the syntactic requirements below:
//  - Scalar is the center (exact rationals for both shipped instances);
//  - coords()/from_coords() give an exact coordinate system over Scalar in
//    which coordinate 0 is the center embedding, so an element is central
//    iff coordinates 1..coord_dim-1 vanish;
//  - same_class_as is the conjugacy test h a h^{-1} = b for some h != 0;
//  - central_min_poly_coeffs() is the monic minimal central polynomial of
//    the element's class (degree kappa), low-to-high coefficients.

#include "skewlagrange/linalg.hpp"
#include "skewlagrange/rational.hpp"

#include <concepts>
#include <cstddef>
#include <span>
#include <vector>

namespace skl {

template <class R>
concept DivisionRingElement = requires(const R a, const R b, const Rational s,
                                       std::span<const Rational> c) {
    typename R::Scalar;
    { R::coord_dim } -> std::convertible_to<std::size_t>;
    { R::zero() } -> std::same_as<R>;
    { R::one() } -> std::same_as<R>;
    { R::from_scalar(s) } -> std::same_as<R>;
    { R::from_coords(c) } -> std::same_as<R>;
    { a + b } -> std::same_as<R>;
    { a - b } -> std::same_as<R>;
    { a * b } -> std::same_as<R>;
    { -a } -> std::same_as<R>;
    { a.inverse() } -> std::same_as<R>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.is_central() } -> std::convertible_to<bool>;
    { a == b } -> std::convertible_to<bool>;
    { a.same_class_as(b) } -> std::convertible_to<bool>;
    { a.coords() } -> std::same_as<std::vector<Rational>>;
    { a.central_min_poly_coeffs() } -> std::same_as<std::vector<Rational>>;
};

static_assert(DivisionRingElement<Rational>);

template <DivisionRingElement R>
R pow(R base, unsigned e) {
    R acc = R::one();
    for (unsigned t = 0; t < e; ++t) acc = acc * base;
    return acc;
}

// Matrix of x -> a*x in center coordinates (column c = coords(a * e_c)).
template <DivisionRingElement R>
RatMatrix left_mul_matrix(const R& a) {
    constexpr std::size_t d = R::coord_dim;
    RatMatrix m(d, d);
    std::vector<Rational> unit(d);
    for (std::size_t c = 0; c < d; ++c) {
        unit[c] = Rational(1);
        auto col = (a * R::from_coords(unit)).coords();
        unit[c] = Rational(0);
        for (std::size_t r = 0; r < d; ++r) m.at(r, c) = col[r];
    }
    return m;
}

// Matrix of x -> x*a.
template <DivisionRingElement R>
RatMatrix right_mul_matrix(const R& a) {
    constexpr std::size_t d = R::coord_dim;
    RatMatrix m(d, d);
    std::vector<Rational> unit(d);
    for (std::size_t c = 0; c < d; ++c) {
        unit[c] = Rational(1);
        auto col = (R::from_coords(unit) * a).coords();
        unit[c] = Rational(0);
        for (std::size_t r = 0; r < d; ++r) m.at(r, c) = col[r];
    }
    return m;
}

// Basis over the center of { x : a x = x b }, computed as the nullspace of
// L_a - R_b in coordinates. Empty iff a and b are not conjugate; for the
// quaternions the dimension is 2 for a non-central conjugate pair and 4
// when a = b is central.
template <DivisionRingElement R>
std::vector<R> intertwiner_basis(const R& a, const R& b) {
    constexpr std::size_t d = R::coord_dim;
    RatMatrix la = left_mul_matrix(a);
    RatMatrix rb = right_mul_matrix(b);
    RatMatrix m(d, d);
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) m.at(r, c) = la.at(r, c) - rb.at(r, c);
    std::vector<R> out;
    for (const auto& v : nullspace_basis(m)) out.push_back(R::from_coords(v));
    return out;
}

}  // namespace skl
