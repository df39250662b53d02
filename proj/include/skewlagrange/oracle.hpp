#pragma once

// Brute-force verification route: interpolation and Sylvester problems
// expanded into exact rational linear systems over center coordinates.
// Every closed-form solver in the library has its answers checked against
// this module; the two routes share no polynomial code.

#include "skewlagrange/linalg.hpp"
#include "skewlagrange/problem.hpp"
#include "skewlagrange/skew_poly.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace skl {

// Two-sided conditions plus optional backward-shift conditions
// (L_a f)^{er}(b) = value.
template <DivisionRingElement R>
struct OracleProblem {
    struct Shift {
        R left_node;
        R right_node;
        R value;
    };
    std::vector<Condition<R>> left;
    std::vector<Condition<R>> right;
    std::vector<Shift> shifts;

    static OracleProblem from(const TwoSidedProblem<R>& p) {
        OracleProblem out;
        out.left = p.left;
        out.right = p.right;
        return out;
    }
};

namespace detail {

inline RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b) {
    RatMatrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a.at(r, k).is_zero()) continue;
            for (std::size_t c = 0; c < b.cols(); ++c)
                out.at(r, c) += a.at(r, k) * b.at(k, c);
        }
    return out;
}

}  // namespace detail

template <DivisionRingElement R>
std::vector<Rational> poly_to_coord_vec(const SkewPoly<R>& f, std::size_t ncoeffs) {
    constexpr std::size_t d = R::coord_dim;
    std::vector<Rational> v(ncoeffs * d);
    for (std::size_t j = 0; j < ncoeffs; ++j) {
        auto c = f.coeff(j).coords();
        for (std::size_t r = 0; r < d; ++r) v[j * d + r] = c[r];
    }
    return v;
}

template <DivisionRingElement R>
SkewPoly<R> poly_from_coord_vec(const std::vector<Rational>& v) {
    constexpr std::size_t d = R::coord_dim;
    std::vector<R> coeffs;
    coeffs.reserve(v.size() / d);
    for (std::size_t j = 0; j * d < v.size(); ++j)
        coeffs.push_back(R::from_coords(std::span<const Rational>(v.data() + j * d, d)));
    return SkewPoly<R>(std::move(coeffs));
}

// All f with deg f < degree_bound meeting the conditions, as an exact
// affine set over the coefficient coordinates.
template <DivisionRingElement R>
AffineSolutionSet oracle_interpolate(const OracleProblem<R>& p, long degree_bound) {
    constexpr std::size_t d = R::coord_dim;
    const std::size_t n = degree_bound < 0 ? 0 : static_cast<std::size_t>(degree_bound);
    const std::size_t nrows = (p.left.size() + p.right.size() + p.shifts.size()) * d;
    RatMatrix sys(nrows, n * d);
    std::vector<Rational> rhs(nrows);
    std::size_t row = 0;

    auto put_block = [&](std::size_t row_block, std::size_t col_block, const RatMatrix& blk) {
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = 0; c < d; ++c)
                sys.at(row_block * d + r, col_block * d + c) += blk.at(r, c);
    };
    auto put_rhs = [&](std::size_t row_block, const R& v) {
        auto co = v.coords();
        for (std::size_t r = 0; r < d; ++r) rhs[row_block * d + r] = co[r];
    };

    for (const auto& cond : p.left) {  // sum_j a^j f_j = c
        for (std::size_t j = 0; j < n; ++j)
            put_block(row, j, left_mul_matrix(pow(cond.node, static_cast<unsigned>(j))));
        put_rhs(row, cond.value);
        ++row;
    }
    for (const auto& cond : p.right) {  // sum_j f_j a^j = c
        for (std::size_t j = 0; j < n; ++j)
            put_block(row, j, right_mul_matrix(pow(cond.node, static_cast<unsigned>(j))));
        put_rhs(row, cond.value);
        ++row;
    }
    for (const auto& sh : p.shifts) {  // sum_{u+w=j-1} a^u f_j b^w = value
        for (std::size_t j = 1; j < n; ++j)
            for (std::size_t u = 0; u + 1 <= j; ++u)
                put_block(row, j,
                          detail::mat_mul(left_mul_matrix(pow(sh.left_node, static_cast<unsigned>(u))),
                                          right_mul_matrix(pow(sh.right_node,
                                                               static_cast<unsigned>(j - 1 - u)))));
        put_rhs(row, sh.value);
        ++row;
    }
    return solve_affine(sys, rhs);
}

// Exact solution set of a x - x b = g in coordinates.
template <DivisionRingElement R>
AffineSolutionSet oracle_sylvester(const R& a, const R& b, const R& g) {
    constexpr std::size_t d = R::coord_dim;
    RatMatrix la = left_mul_matrix(a);
    RatMatrix rb = right_mul_matrix(b);
    RatMatrix m(d, d);
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) m.at(r, c) = la.at(r, c) - rb.at(r, c);
    return solve_affine(m, g.coords());
}

// Whether f lies in the affine set produced by oracle_interpolate with the
// given bound.
template <DivisionRingElement R>
bool oracle_set_contains(const AffineSolutionSet& set, const SkewPoly<R>& f, long degree_bound) {
    if (!set.solvable()) return false;
    if (!f.is_zero() && f.degree() >= degree_bound) return false;
    auto vec = poly_to_coord_vec(f, static_cast<std::size_t>(degree_bound));
    std::vector<Rational> diff(vec.size());
    for (std::size_t t = 0; t < vec.size(); ++t) diff[t] = vec[t] - (*set.particular)[t];
    return express_in_span(set.nullspace, diff).has_value();
}

}  // namespace skl
