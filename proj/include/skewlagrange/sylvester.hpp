#pragma once

// Closed-form solvers for the scalar Sylvester equation a x - x b = g over
// the division ring, with a algebraic over the center. Non-conjugate pairs
// have a unique solution; conjugate pairs are solvable iff the evaluated
// shift of the minimal central polynomial annihilates g, in which case the
// solutions form an affine set over the intertwiner space.

#include "skewlagrange/oracle.hpp"
#include "skewlagrange/skew_poly.hpp"

#include <cassert>
#include <optional>
#include <stdexcept>
#include <vector>

namespace skl {

enum class SylvesterStatus { Unique, Affine, Unsolvable };

template <DivisionRingElement R>
struct SylvesterSolution {
    SylvesterStatus status = SylvesterStatus::Unsolvable;
    std::optional<R> particular;
    std::vector<R> basis;  // intertwiners of (a, b); empty unless Affine

    bool solvable() const { return status != SylvesterStatus::Unsolvable; }
};

// x = -(L_a X_[a] g)^{er}(b) X_[a](b)^{-1}; requires b outside [a].
template <DivisionRingElement R>
R sylvester_unique(const R& a, const R& b, const R& g) {
    if (a.same_class_as(b)) throw std::domain_error("sylvester_unique: conjugate pair");
    const CentralPoly chi = central_min_poly(a);
    const R num = shift_left(a, embed_central<R>(chi)).scaled_right(g).eval_right(b);
    return -(num * central_eval(chi, b).inverse());
}

// Mirror closed form through the minimal polynomial of [b]; valid for
// algebraic b and non-conjugate pairs. Used as a cross-check of
// sylvester_unique.
template <DivisionRingElement R>
R sylvester_unique_alt(const R& a, const R& b, const R& g) {
    if (a.same_class_as(b)) throw std::domain_error("sylvester_unique_alt: conjugate pair");
    const CentralPoly chi = central_min_poly(b);
    const R num = shift_left(b, embed_central<R>(chi)).scaled_left(g).eval_left(a);
    return central_eval(chi, a).inverse() * num;
}

// (L_a X_[a] g)^{er}(b) = 0: the solvability test for a conjugate pair.
template <DivisionRingElement R>
bool solvability_check(const R& a, const R& b, const R& g) {
    if (!a.same_class_as(b))
        throw std::domain_error("solvability_check: pair is not conjugate; use solve_sylvester");
    const CentralPoly chi = central_min_poly(a);
    return shift_left(a, embed_central<R>(chi)).scaled_right(g).eval_right(b).is_zero();
}

// Particular solution for a solvable conjugate pair:
// sum_{j=1}^{kappa-1} sum_{i=0}^{j-1} (-1)^{i+j}/(j+1)! C(j-1,i)
//   a^i g X^{(j+1)}(b) b^{j-1-i} X'(b)^{-1}.
// kappa = 1 (central a, so b = a and g = 0) leaves the sum empty.
template <DivisionRingElement R>
R sylvester_conjugate_particular(const R& a, const R& b, const R& g) {
    const CentralPoly chi = central_min_poly(a);
    const long kappa = chi.degree();
    R acc = R::zero();
    for (long j = 1; j < kappa; ++j) {
        const Rational jfac = factorial(static_cast<unsigned>(j + 1)).inverse();
        const R deriv_val =
            central_eval(chi.derivative(static_cast<unsigned>(j + 1)), b);
        for (long i = 0; i < j; ++i) {
            Rational coef = jfac * binomial(static_cast<unsigned>(j - 1), static_cast<unsigned>(i));
            if ((i + j) % 2 != 0) coef = -coef;
            acc = acc + R::from_scalar(coef) * pow(a, static_cast<unsigned>(i)) * g * deriv_val *
                            pow(b, static_cast<unsigned>(j - 1 - i));
        }
    }
    return acc * central_eval(chi.derivative(), b).inverse();
}

template <DivisionRingElement R>
SylvesterSolution<R> solve_sylvester(const R& a, const R& b, const R& g) {
    SylvesterSolution<R> out;
    if (!a.same_class_as(b)) {
        out.status = SylvesterStatus::Unique;
        out.particular = sylvester_unique(a, b, g);
    } else if (solvability_check(a, b, g)) {
        out.status = SylvesterStatus::Affine;
        out.particular = sylvester_conjugate_particular(a, b, g);
        out.basis = intertwiner_basis(a, b);
    }
    if (out.particular && !(a * *out.particular - *out.particular * b == g))
        throw std::logic_error("solve_sylvester: residual check failed");
#ifndef NDEBUG
    // Anti-drift guard: the coordinate route must agree exactly.
    auto ora = oracle_sylvester(a, b, g);
    assert(ora.solvable() == out.solvable());
    assert(!out.solvable() || ora.dimension() == out.basis.size());
#endif
    return out;
}

// Entry (i, j) solves node_l[i] x - x node_r[j] = c[i] - d[j].
template <DivisionRingElement R>
std::vector<std::vector<SylvesterSolution<R>>> batch_sylvester(const std::vector<R>& lambda,
                                                               const std::vector<R>& omega,
                                                               const std::vector<R>& c,
                                                               const std::vector<R>& d) {
    if (c.size() != lambda.size() || d.size() != omega.size())
        throw std::invalid_argument("batch_sylvester: target count mismatch");
    std::vector<std::vector<SylvesterSolution<R>>> out(lambda.size());
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        out[i].reserve(omega.size());
        for (std::size_t j = 0; j < omega.size(); ++j)
            out[i].push_back(solve_sylvester(lambda[i], omega[j], c[i] - d[j]));
    }
    return out;
}

}  // namespace skl
