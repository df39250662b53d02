#pragma once

// The two-sided problem: prescribe left values on Lambda and right values
// on Omega at once. The solver routes through the modified problem that
// also pins the mixed shift values (L_{a_i} f)^{er}(b_j); those values are
// exactly the solutions of the Sylvester equations
// a_i psi_ij - psi_ij b_j = c_i - d_j, and the low-degree solution family
// is the base polynomial plus intertwiner contributions from conjugate
// node pairs.

#include "skewlagrange/ideal.hpp"
#include "skewlagrange/interpolate.hpp"
#include "skewlagrange/problem.hpp"
#include "skewlagrange/sylvester.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace skl {

struct PairWitness {
    std::size_t left_index = 0;
    std::size_t right_index = 0;
};

// base + span(homogeneous_basis) are all solutions of degree < n + k;
// adding left_modulus * h * right_modulus ranges over the rest.
template <DivisionRingElement R>
struct TwoSidedFamily {
    SkewPoly<R> base;
    std::vector<SkewPoly<R>> homogeneous_basis;
    SkewPoly<R> left_modulus;
    SkewPoly<R> right_modulus;
};

template <DivisionRingElement R>
struct TwoSidedOutcome {
    std::optional<TwoSidedFamily<R>> family;
    std::optional<PairWitness> witness;  // first violating pair, row-major

    bool solvable() const { return family.has_value(); }
};

namespace detail {

// Shared scaffolding: the one-node-deleted minimal polynomials and their
// evaluations for both sides.
template <DivisionRingElement R>
struct TwoSidedParts {
    std::vector<R> lam, om, c, d;
    SkewPoly<R> p_lambda, p_omega;                 // P_{Lambda,l}, P_{Omega,r}
    std::vector<SkewPoly<R>> p, q;                 // deleted minimal polynomials
    std::vector<R> p_inv, q_inv;                   // p_i^{el}(a_i)^{-1}, q_j^{er}(b_j)^{-1}
};

template <DivisionRingElement R>
TwoSidedParts<R> two_sided_parts(const TwoSidedProblem<R>& prob, const char* who) {
    require_distinct_nodes(prob.left, who);
    require_distinct_nodes(prob.right, who);
    TwoSidedParts<R> parts;
    parts.lam = nodes_of(prob.left);
    parts.om = nodes_of(prob.right);
    parts.c = values_of(prob.left);
    parts.d = values_of(prob.right);
    if (!is_p_independent_left(parts.lam))
        throw dependent_nodes_error(std::string(who) +
                                    ": left nodes are not P-independent; reduce first");
    if (!is_p_independent_right(parts.om))
        throw dependent_nodes_error(std::string(who) +
                                    ": right nodes are not P-independent; reduce first");
    parts.p_lambda = minimal_poly_left(parts.lam).poly;
    parts.p_omega = minimal_poly_right(parts.om).poly;
    for (std::size_t i = 0; i < parts.lam.size(); ++i) {
        parts.p.push_back(minimal_poly_left(erase_index(parts.lam, i)).poly);
        parts.p_inv.push_back(parts.p.back().eval_left(parts.lam[i]).inverse());
    }
    for (std::size_t j = 0; j < parts.om.size(); ++j) {
        parts.q.push_back(minimal_poly_right(erase_index(parts.om, j)).poly);
        parts.q_inv.push_back(parts.q.back().eval_right(parts.om[j]).inverse());
    }
    return parts;
}

// f = sum_i p_i p_i^{el}(a_i)^{-1} c_i
//     + P_Lambda sum_{ij} p_i^{el}(a_i)^{-1} psi_ij q_j^{er}(b_j)^{-1} q_j.
template <DivisionRingElement R>
SkewPoly<R> assemble_base(const TwoSidedParts<R>& parts,
                          const std::vector<std::vector<R>>& psi) {
    SkewPoly<R> f;
    for (std::size_t i = 0; i < parts.lam.size(); ++i)
        f += parts.p[i].scaled_right(parts.p_inv[i] * parts.c[i]);
    SkewPoly<R> tail;
    for (std::size_t i = 0; i < parts.lam.size(); ++i)
        for (std::size_t j = 0; j < parts.om.size(); ++j)
            tail += parts.q[j].scaled_left(parts.p_inv[i] * psi[i][j] * parts.q_inv[j]);
    return f + parts.p_lambda * tail;
}

// The same polynomial arranged around the right Lagrange part:
// f = sum_j d_j q_j^{er}(b_j)^{-1} q_j
//     + sum_{ij} p_i p_i^{el}(a_i)^{-1} psi_ij q_j^{er}(b_j)^{-1} P_Omega.
template <DivisionRingElement R>
SkewPoly<R> assemble_base_symmetric(const TwoSidedParts<R>& parts,
                                    const std::vector<std::vector<R>>& psi) {
    SkewPoly<R> f;
    for (std::size_t j = 0; j < parts.om.size(); ++j)
        f += parts.q[j].scaled_left(parts.d[j] * parts.q_inv[j]);
    for (std::size_t i = 0; i < parts.lam.size(); ++i)
        for (std::size_t j = 0; j < parts.om.size(); ++j)
            f += parts.p[i] * parts.p_omega.scaled_left(parts.p_inv[i] * psi[i][j] * parts.q_inv[j]);
    return f;
}

}  // namespace detail

// Unique f of degree < n + k with f^{el}(a_i) = c_i, f^{er}(b_j) = d_j and
// (L_{a_i} f)^{er}(b_j) = psi_ij. The psi must solve the Sylvester
// equations; a violating entry is reported by index.
template <DivisionRingElement R>
SkewPoly<R> solve_modified(const TwoSidedProblem<R>& prob, const std::vector<std::vector<R>>& psi) {
    auto parts = detail::two_sided_parts(prob, "solve_modified");
    if (psi.size() != parts.lam.size())
        throw std::invalid_argument("solve_modified: psi row count mismatch");
    for (std::size_t i = 0; i < parts.lam.size(); ++i) {
        if (psi[i].size() != parts.om.size())
            throw std::invalid_argument("solve_modified: psi column count mismatch");
        for (std::size_t j = 0; j < parts.om.size(); ++j)
            if (!(parts.lam[i] * psi[i][j] - psi[i][j] * parts.om[j] == parts.c[i] - parts.d[j]))
                throw std::invalid_argument("solve_modified: psi(" + std::to_string(i) + "," +
                                            std::to_string(j) +
                                            ") violates its Sylvester equation");
    }
    return detail::assemble_base(parts, psi);
}

// The symmetric arrangement of the same solution; equal to solve_modified
// as a polynomial whenever psi solves the Sylvester equations.
template <DivisionRingElement R>
SkewPoly<R> solve_modified_symmetric(const TwoSidedProblem<R>& prob,
                                     const std::vector<std::vector<R>>& psi) {
    auto parts = detail::two_sided_parts(prob, "solve_modified_symmetric");
    return detail::assemble_base_symmetric(parts, psi);
}

template <DivisionRingElement R>
TwoSidedOutcome<R> solve_two_sided(const TwoSidedProblem<R>& prob) {
    auto parts = detail::two_sided_parts(prob, "solve_two_sided");
    const std::size_t n = parts.lam.size(), k = parts.om.size();

    TwoSidedOutcome<R> out;
    std::vector<std::vector<R>> psi(n, std::vector<R>(k, R::zero()));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            const R gamma = parts.c[i] - parts.d[j];
            if (!parts.lam[i].same_class_as(parts.om[j])) {
                psi[i][j] = sylvester_unique(parts.lam[i], parts.om[j], gamma);
            } else if (solvability_check(parts.lam[i], parts.om[j], gamma)) {
                psi[i][j] = sylvester_conjugate_particular(parts.lam[i], parts.om[j], gamma);
            } else {
                out.witness = PairWitness{i, j};
                return out;
            }
        }
    }

    TwoSidedFamily<R> fam;
    fam.base = detail::assemble_base(parts, psi);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            if (!parts.lam[i].same_class_as(parts.om[j])) continue;
            for (const auto& v : intertwiner_basis(parts.lam[i], parts.om[j]))
                fam.homogeneous_basis.push_back(
                    parts.p_lambda * parts.q[j].scaled_left(parts.p_inv[i] * v * parts.q_inv[j]));
        }
    fam.left_modulus = parts.p_lambda;
    fam.right_modulus = parts.p_omega;
    out.family = std::move(fam);
    return out;
}

// No nonzero polynomial of degree < n + k left-vanishes on lambda and
// right-vanishes on omega: each side P-independent and the class closures
// disjoint.
template <DivisionRingElement R>
bool two_sided_p_independent(const std::vector<R>& lambda, const std::vector<R>& omega) {
    if (!is_p_independent_left(lambda) || !is_p_independent_right(omega)) return false;
    for (const auto& a : lambda)
        for (const auto& b : omega)
            if (a.same_class_as(b)) return false;
    return true;
}

// Two-sided Lagrange formula for a P-independent pair (disjoint class
// closures): per-condition elementary pieces
//   f_{l,i} = p_i rho_i P_Omega,  f_{r,j} = P_Lambda gamma_j q_j
// with the sandwich coefficients obtained from the unique Sylvester
// solutions of the elementary problems. An empty side degenerates to the
// plain one-sided formula.
template <DivisionRingElement R>
SkewPoly<R> lagrange_two_sided(const TwoSidedProblem<R>& prob) {
    auto parts = detail::two_sided_parts(prob, "lagrange_two_sided");
    if (!two_sided_p_independent(parts.lam, parts.om))
        throw dependent_nodes_error(
            "lagrange_two_sided: node pair is not two-sided P-independent; use solve_two_sided");
    if (parts.om.empty()) return lagrange_left(parts.lam, parts.c);
    if (parts.lam.empty()) return lagrange_right(parts.om, parts.d);

    SkewPoly<R> f;
    for (std::size_t i = 0; i < parts.lam.size(); ++i) {
        R rho = R::zero();
        for (std::size_t j = 0; j < parts.om.size(); ++j)
            rho = rho + parts.p_inv[i] * sylvester_unique(parts.lam[i], parts.om[j], parts.c[i]) *
                            parts.q_inv[j];
        f += parts.p[i] * parts.p_omega.scaled_left(rho);
    }
    for (std::size_t j = 0; j < parts.om.size(); ++j) {
        R gam = R::zero();
        for (std::size_t i = 0; i < parts.lam.size(); ++i)
            gam = gam - parts.p_inv[i] * sylvester_unique(parts.lam[i], parts.om[j], parts.d[j]) *
                            parts.q_inv[j];
        f += parts.p_lambda * parts.q[j].scaled_left(gam);
    }
    return f;
}

// A right condition whose node lives in a class saturated by left nodes is
// not free: its value is forced by the left data.
template <DivisionRingElement R>
struct ForcedCondition {
    std::size_t right_index;
    R forced_value;
    bool consistent;
};

// For each class where the left nodes contain a left P-basis of the whole
// class, report every right condition in that class together with its
// forced value.
template <DivisionRingElement R>
std::vector<ForcedCondition<R>> within_class_redundancy(const TwoSidedProblem<R>& prob) {
    require_distinct_nodes(prob.left, "within_class_redundancy");
    require_distinct_nodes(prob.right, "within_class_redundancy");
    std::vector<ForcedCondition<R>> out;
    std::vector<bool> seen(prob.left.size(), false);
    for (std::size_t i = 0; i < prob.left.size(); ++i) {
        if (seen[i]) continue;
        std::vector<R> basis_nodes, basis_values;
        for (std::size_t t = i; t < prob.left.size(); ++t) {
            if (prob.left[t].node.same_class_as(prob.left[i].node)) {
                seen[t] = true;
                basis_nodes.push_back(prob.left[t].node);
                basis_values.push_back(prob.left[t].value);
            }
        }
        // A left P-basis of the class has size kappa.
        const long kappa = central_min_poly(prob.left[i].node).degree();
        auto mp = minimal_poly_left(basis_nodes);
        if (mp.basis.size() != basis_nodes.size() ||
            static_cast<long>(basis_nodes.size()) != kappa)
            continue;
        for (std::size_t j = 0; j < prob.right.size(); ++j) {
            if (!prob.right[j].node.same_class_as(prob.left[i].node)) continue;
            R forced = extend_in_class(basis_nodes, basis_values, prob.right[j].node, Side::Right);
            out.push_back({j, forced, forced == prob.right[j].value});
        }
    }
    return out;
}

}  // namespace skl
