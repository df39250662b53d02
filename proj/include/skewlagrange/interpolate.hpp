#pragma once

// One-sided Lagrange interpolation on P-independent node sets, the
// consistency reduction that makes dependent inputs usable, extension of
// values across a conjugacy class from a P-basis, and the Vandermonde
// bottom row.

#include "skewlagrange/ideal.hpp"
#include "skewlagrange/problem.hpp"
#include "skewlagrange/skew_poly.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace skl {

// Every solution of the source problem is particular + P_l h (left),
// particular + g P_r (right), or particular + span(homogeneous_basis) +
// P_l h P_r (two-sided).
template <DivisionRingElement R>
struct InterpolationFamily {
    SkewPoly<R> particular;
    std::optional<SkewPoly<R>> modulus_left;
    std::optional<SkewPoly<R>> modulus_right;
    std::vector<SkewPoly<R>> homogeneous_basis;
};

namespace detail {

template <DivisionRingElement R>
std::vector<R> erase_index(const std::vector<R>& v, std::size_t skip) {
    std::vector<R> out;
    out.reserve(v.size() - 1);
    for (std::size_t t = 0; t < v.size(); ++t)
        if (t != skip) out.push_back(v[t]);
    return out;
}

}  // namespace detail

// Unique f with deg f < n and f^{el}(node_i) = value_i:
// f = sum_i p_i p_i^{el}(node_i)^{-1} value_i, p_i the minimal polynomial
// of the other nodes.
template <DivisionRingElement R>
SkewPoly<R> lagrange_left(const std::vector<R>& nodes, const std::vector<R>& values) {
    if (nodes.size() != values.size())
        throw std::invalid_argument("lagrange_left: node/value count mismatch");
    if (!is_p_independent_left(nodes))
        throw dependent_nodes_error(
            "lagrange_left: node set is not left P-independent; reduce with consistency_reduce");
    SkewPoly<R> f;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        auto pi = minimal_poly_left(detail::erase_index(nodes, i)).poly;
        f += pi.scaled_right(pi.eval_left(nodes[i]).inverse() * values[i]);
    }
    return f;
}

// Mirror: f = sum_i value_i q_i^{er}(node_i)^{-1} q_i.
template <DivisionRingElement R>
SkewPoly<R> lagrange_right(const std::vector<R>& nodes, const std::vector<R>& values) {
    if (nodes.size() != values.size())
        throw std::invalid_argument("lagrange_right: node/value count mismatch");
    if (!is_p_independent_right(nodes))
        throw dependent_nodes_error(
            "lagrange_right: node set is not right P-independent; reduce with consistency_reduce");
    SkewPoly<R> f;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        auto qi = minimal_poly_right(detail::erase_index(nodes, i)).poly;
        f += qi.scaled_left(values[i] * qi.eval_right(nodes[i]).inverse());
    }
    return f;
}

template <DivisionRingElement R>
SkewPoly<R> lagrange_one_sided(const OneSidedProblem<R>& p) {
    require_distinct_nodes(p.conditions, "lagrange");
    return p.side == Side::Left ? lagrange_left(nodes_of(p.conditions), values_of(p.conditions))
                                : lagrange_right(nodes_of(p.conditions), values_of(p.conditions));
}

// Unique low-degree interpolant plus the modulus describing all other
// solutions: particular + P_l h on the left, particular + g P_r on the
// right.
template <DivisionRingElement R>
InterpolationFamily<R> lagrange_family(const OneSidedProblem<R>& p) {
    InterpolationFamily<R> fam;
    fam.particular = lagrange_one_sided(p);
    auto nodes = nodes_of(p.conditions);
    if (p.side == Side::Left)
        fam.modulus_left = minimal_poly_left(nodes).poly;
    else
        fam.modulus_right = minimal_poly_right(nodes).poly;
    return fam;
}

// Outcome of consistency reduction: either the equivalent subproblem on a
// P-basis (dropped conditions were redundant), or the index of the first
// condition whose target disagrees with the value forced by the basis.
template <DivisionRingElement R>
struct ConsistencyReduction {
    bool consistent = true;
    OneSidedProblem<R> reduced;
    std::vector<std::size_t> basis;
    std::size_t witness = 0;
};

template <DivisionRingElement R>
ConsistencyReduction<R> consistency_reduce(const OneSidedProblem<R>& p) {
    require_distinct_nodes(p.conditions, "consistency_reduce");
    auto nodes = nodes_of(p.conditions);
    auto mp = p.side == Side::Left ? minimal_poly_left(nodes) : minimal_poly_right(nodes);

    ConsistencyReduction<R> out;
    out.basis = mp.basis;
    out.reduced.side = p.side;
    for (std::size_t idx : mp.basis) out.reduced.conditions.push_back(p.conditions[idx]);
    if (mp.basis.size() == p.conditions.size()) return out;

    // Values of any interpolant on the basis extend uniquely to the whole
    // P-closure; a dropped condition is admissible iff its target matches.
    auto f0 = lagrange_one_sided(out.reduced);
    std::vector<bool> kept(p.conditions.size(), false);
    for (std::size_t idx : mp.basis) kept[idx] = true;
    for (std::size_t idx = 0; idx < p.conditions.size(); ++idx) {
        if (kept[idx]) continue;
        R forced = p.side == Side::Left ? f0.eval_left(p.conditions[idx].node)
                                        : f0.eval_right(p.conditions[idx].node);
        if (!(forced == p.conditions[idx].value)) {
            out.consistent = false;
            out.witness = idx;
            return out;
        }
    }
    return out;
}

// Value at `target` shared by every polynomial whose left values on a left
// P-basis of the class are prescribed. side selects whether the left or
// the right value at `target` is produced.
template <DivisionRingElement R>
R extend_in_class(const std::vector<R>& basis_nodes, const std::vector<R>& basis_values,
                  const R& target, Side side) {
    if (basis_nodes.size() != basis_values.size() || basis_nodes.empty())
        throw std::invalid_argument("extend_in_class: bad basis data");
    for (const auto& n : basis_nodes)
        if (!n.same_class_as(target))
            throw std::domain_error("extend_in_class: target not in the basis class");
    auto mp = minimal_poly_left(basis_nodes);
    const auto class_poly = central_min_poly(basis_nodes[0]);
    if (mp.basis.size() != basis_nodes.size() || !mp.poly.is_central() ||
        mp.poly.degree() != class_poly.degree())
        throw std::domain_error("extend_in_class: nodes are not a left P-basis of the class");

    R acc = R::zero();
    for (std::size_t i = 0; i < basis_nodes.size(); ++i) {
        auto pi = minimal_poly_left(detail::erase_index(basis_nodes, i)).poly;
        R coef = pi.eval_left(basis_nodes[i]).inverse() * basis_values[i];
        if (side == Side::Left)
            acc = acc + pi.eval_left(target) * coef;
        else
            acc = acc + pi.scaled_right(coef).eval_right(target);
    }
    return acc;
}

// Bottom row v of W^{-1} for the Vandermonde matrix W = [node_i^{j-1}]:
// sum_i v_i node_i^{j-1} = 0 for j < n and = 1 for j = n.
template <DivisionRingElement R>
std::vector<R> vandermonde_bottom_row(const std::vector<R>& nodes) {
    constexpr std::size_t d = R::coord_dim;
    const std::size_t n = nodes.size();
    if (n == 0) throw std::invalid_argument("vandermonde_bottom_row: empty node set");
    RatMatrix sys(n * d, n * d);
    std::vector<Rational> rhs(n * d);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            auto blk = right_mul_matrix(pow(nodes[i], static_cast<unsigned>(j)));
            for (std::size_t r = 0; r < d; ++r)
                for (std::size_t c = 0; c < d; ++c) sys.at(j * d + r, i * d + c) = blk.at(r, c);
        }
    }
    auto one = R::one().coords();
    for (std::size_t r = 0; r < d; ++r) rhs[(n - 1) * d + r] = one[r];

    auto sol = solve_affine(sys, rhs);
    if (!sol.solvable() || !sol.nullspace.empty())
        throw std::domain_error("vandermonde_bottom_row: singular Vandermonde matrix");
    std::vector<R> v;
    v.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::span<const Rational> cs(sol.particular->data() + i * d, d);
        v.push_back(R::from_coords(cs));
    }
    return v;
}

}  // namespace skl
