#pragma once

// Central divisor/multiple structure of skew polynomials and the
// generalized Lagrange formula. Every nonzero polynomial over the shipped
// instances is bounded: g * conj(g) is a central multiple, so the least
// central multiple M_g exists and the cofactor g^diamond with
// M_g = g g^diamond = g^diamond g is found by a minimal-degree kernel
// search. The greatest central divisor D_g is the gcd over the center of
// the coordinate component polynomials of g.
//
// These power the lambda-transform inverses and, through them, the
// elementary coefficients and per-class reductions that assemble a
// two-sided interpolant across conjugacy classes.

#include "skewlagrange/ideal.hpp"
#include "skewlagrange/interpolate.hpp"
#include "skewlagrange/problem.hpp"
#include "skewlagrange/two_sided.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace skl {

template <DivisionRingElement R>
struct BoundedDecomposition {
    CentralPoly d;        // greatest central divisor, monic
    SkewPoly<R> q;        // g = d q = q d
    CentralPoly m;        // least central multiple, monic
    SkewPoly<R> diamond;  // m = g diamond = diamond g
};

// Component polynomial along coordinate c: sum_j coords(g_j)[c] z^j.
template <DivisionRingElement R>
CentralPoly component_poly(const SkewPoly<R>& g, std::size_t c) {
    std::vector<Rational> v;
    v.reserve(g.coeffs().size());
    for (const auto& coeff : g.coeffs()) v.push_back(coeff.coords()[c]);
    return CentralPoly(std::move(v));
}

// A central polynomial divides g iff it divides every component, so the
// greatest central divisor is the componentwise gcd.
template <DivisionRingElement R>
CentralPoly greatest_central_divisor(const SkewPoly<R>& g) {
    if (g.is_zero()) throw std::domain_error("greatest_central_divisor: zero polynomial");
    CentralPoly acc;
    for (std::size_t c = 0; c < R::coord_dim; ++c) acc = central_gcd(acc, component_poly(g, c));
    return acc;
}

namespace detail {

// Smallest-degree h with g h central, found by increasing the degree bound
// until the coordinate constraints admit a nonzero kernel vector. The
// central norm guarantees a hit by deg h = deg g.
template <DivisionRingElement R>
std::pair<CentralPoly, SkewPoly<R>> least_central_multiple_search(const SkewPoly<R>& g) {
    constexpr std::size_t dim = R::coord_dim;
    const long dg = g.degree();
    for (long m = 0; m <= dg; ++m) {
        const std::size_t nh = static_cast<std::size_t>(m) + 1;
        const std::size_t nprod = static_cast<std::size_t>(dg + m) + 1;
        RatMatrix sys(nprod * (dim - 1), nh * dim);
        for (std::size_t p = 0; p < nprod; ++p) {
            for (std::size_t w = 0; w < nh; ++w) {
                if (w > p || p - w > static_cast<std::size_t>(dg)) continue;
                auto blk = left_mul_matrix(g.coeffs()[p - w]);
                for (std::size_t r = 1; r < dim; ++r)
                    for (std::size_t col = 0; col < dim; ++col)
                        sys.at(p * (dim - 1) + (r - 1), w * dim + col) += blk.at(r, col);
            }
        }
        auto basis = nullspace_basis(sys);
        if (basis.empty()) continue;
        auto h = poly_from_coord_vec<R>(basis.front());
        auto prod = g * h;
        // prod is central by construction; normalize monic.
        const Rational lead = prod.lead().coords()[0];
        h = h.scaled_right(R::from_scalar(lead.inverse()));
        prod = g * h;
        return {component_poly(prod, 0), std::move(h)};
    }
    throw std::logic_error("least_central_multiple_search: no central multiple found");
}

}  // namespace detail

template <DivisionRingElement R>
BoundedDecomposition<R> bounded_decompose(const SkewPoly<R>& g) {
    if (g.is_zero()) throw std::domain_error("bounded_decompose: zero polynomial");
    BoundedDecomposition<R> out;
    out.d = greatest_central_divisor(g);
    out.q = divide_left(g, embed_central<R>(out.d)).quotient;
    auto [m, diamond] = detail::least_central_multiple_search(g);
    out.m = std::move(m);
    out.diamond = std::move(diamond);
    return out;
}

// Inverse of delta -> (h delta)^{er}(b):
// delta = (h^diamond d)^{er}(b) M_h(b)^{-1}. Requires M_h(b) != 0, d != 0.
template <DivisionRingElement R>
R lambda_inverse_right(const SkewPoly<R>& h, const R& d, const R& b) {
    if (d.is_zero()) throw std::domain_error("lambda_inverse_right: zero target");
    auto [m, diamond] = detail::least_central_multiple_search(h);
    const R mb = central_eval(m, b);
    if (mb.is_zero()) throw std::domain_error("lambda_inverse_right: least central multiple vanishes at node");
    return diamond.scaled_right(d).eval_right(b) * mb.inverse();
}

// Inverse of delta -> (delta h)^{el}(b):
// delta = M_h(b)^{-1} (d h^diamond)^{el}(b).
template <DivisionRingElement R>
R lambda_inverse_left(const SkewPoly<R>& h, const R& d, const R& b) {
    if (d.is_zero()) throw std::domain_error("lambda_inverse_left: zero target");
    auto [m, diamond] = detail::least_central_multiple_search(h);
    const R mb = central_eval(m, b);
    if (mb.is_zero()) throw std::domain_error("lambda_inverse_left: least central multiple vanishes at node");
    return mb.inverse() * diamond.scaled_left(d).eval_left(b);
}

// Sandwich coefficient rho_i making P_{Lambda\{a_i},l} rho_i P_{Omega,r}
// take value c at a_i. The node must lie outside the class closure of
// omega.
template <DivisionRingElement R>
R elementary_left_coefficient(const std::vector<R>& lambda, const std::vector<R>& omega,
                              std::size_t i, const R& c) {
    for (const auto& b : omega)
        if (lambda.at(i).same_class_as(b))
            throw std::domain_error("elementary_left_coefficient: node conjugate to a right node");
    if (c.is_zero()) return R::zero();
    auto pi = minimal_poly_left(detail::erase_index(lambda, i)).poly;
    auto p_omega = minimal_poly_right(omega).poly;
    auto [m, diamond] = detail::least_central_multiple_search(p_omega);
    return pi.eval_left(lambda[i]).inverse() * central_eval(m, lambda[i]).inverse() *
           diamond.scaled_left(c).eval_left(lambda[i]);
}

// Mirror: gamma_j making P_{Lambda,l} gamma_j P_{Omega\{b_j},r} take right
// value d at b_j.
template <DivisionRingElement R>
R elementary_right_coefficient(const std::vector<R>& lambda, const std::vector<R>& omega,
                               std::size_t j, const R& d) {
    for (const auto& a : lambda)
        if (omega.at(j).same_class_as(a))
            throw std::domain_error("elementary_right_coefficient: node conjugate to a left node");
    if (d.is_zero()) return R::zero();
    auto qj = minimal_poly_right(detail::erase_index(omega, j)).poly;
    auto p_lambda = minimal_poly_left(lambda).poly;
    auto [m, diamond] = detail::least_central_multiple_search(p_lambda);
    return diamond.scaled_right(d).eval_right(omega[j]) * central_eval(m, omega[j]).inverse() *
           qj.eval_right(omega[j]).inverse();
}

// Nodes of one side split into the part outside the other side's class
// closure and the per-class blocks shared with it.
template <DivisionRingElement R>
struct ClassPartition {
    std::vector<std::size_t> lambda0, omega0;  // indices outside shared classes
    struct SharedClass {
        R representative;
        std::vector<std::size_t> lambda_s, omega_s;
    };
    std::vector<SharedClass> shared;
};

namespace detail {

// Deterministic class ordering: kappa first, then the reversed-sign top
// coefficient (the class trace), then the remaining coefficients.
template <DivisionRingElement R>
std::vector<Rational> class_sort_key(const R& rep) {
    auto coeffs = rep.central_min_poly_coeffs();
    std::vector<Rational> key;
    key.push_back(Rational(static_cast<long>(coeffs.size())));
    key.push_back(-coeffs[coeffs.size() - 2]);
    for (const auto& c : coeffs) key.push_back(c);
    return key;
}

}  // namespace detail

template <DivisionRingElement R>
ClassPartition<R> partition_by_class(const std::vector<R>& lambda, const std::vector<R>& omega) {
    ClassPartition<R> out;
    auto in_closure = [](const R& x, const std::vector<R>& set) {
        for (const auto& y : set)
            if (x.same_class_as(y)) return true;
        return false;
    };
    std::vector<bool> lam_shared(lambda.size()), om_shared(omega.size());
    for (std::size_t i = 0; i < lambda.size(); ++i)
        if (in_closure(lambda[i], omega))
            lam_shared[i] = true;
        else
            out.lambda0.push_back(i);
    for (std::size_t j = 0; j < omega.size(); ++j)
        if (in_closure(omega[j], lambda))
            om_shared[j] = true;
        else
            out.omega0.push_back(j);
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        if (!lam_shared[i]) continue;
        bool found = false;
        for (auto& cls : out.shared)
            if (cls.representative.same_class_as(lambda[i])) {
                cls.lambda_s.push_back(i);
                found = true;
            }
        if (!found) out.shared.push_back({lambda[i], {i}, {}});
    }
    for (std::size_t j = 0; j < omega.size(); ++j) {
        if (!om_shared[j]) continue;
        for (auto& cls : out.shared)
            if (cls.representative.same_class_as(omega[j])) cls.omega_s.push_back(j);
    }
    std::sort(out.shared.begin(), out.shared.end(), [](const auto& a, const auto& b) {
        return detail::class_sort_key(a.representative) < detail::class_sort_key(b.representative);
    });
    return out;
}

// Reduction of the conditions inside one shared class: the outer minimal
// polynomials are peeled off, moving the nodes to conjugates and the
// targets through the lambda-transform inverses. Any g_s solving the
// reduced problem lifts to P_{Lambda\Lambda_s,l} g_s P_{Omega\Omega_s,r}.
template <DivisionRingElement R>
struct ClassReduction {
    TwoSidedProblem<R> reduced;
    SkewPoly<R> left_outer;   // P_{Lambda\Lambda_s,l}
    SkewPoly<R> right_outer;  // P_{Omega\Omega_s,r}
};

template <DivisionRingElement R>
ClassReduction<R> class_reduce(const std::vector<std::size_t>& lambda_s,
                               const std::vector<std::size_t>& omega_s,
                               const std::vector<R>& lambda, const std::vector<R>& omega,
                               const std::vector<R>& c, const std::vector<R>& d) {
    auto erase_many = [](const std::vector<R>& v, const std::vector<std::size_t>& skip) {
        std::vector<R> out;
        for (std::size_t t = 0; t < v.size(); ++t)
            if (std::find(skip.begin(), skip.end(), t) == skip.end()) out.push_back(v[t]);
        return out;
    };
    ClassReduction<R> out;
    out.left_outer = minimal_poly_left(erase_many(lambda, lambda_s)).poly;
    out.right_outer = minimal_poly_right(erase_many(omega, omega_s)).poly;
    auto [m_right, diamond_right] = detail::least_central_multiple_search(out.right_outer);
    auto [m_left, diamond_left] = detail::least_central_multiple_search(out.left_outer);

    for (std::size_t i : lambda_s) {
        const R e = out.left_outer.eval_left(lambda.at(i));
        if (e.is_zero())
            throw std::domain_error("class_reduce: outer left minimal polynomial vanishes in class");
        R rho = R::zero();
        if (!c.at(i).is_zero()) {
            const R mval = central_eval(m_right, lambda[i]);
            if (mval.is_zero())
                throw std::domain_error("class_reduce: right outer multiple vanishes in class");
            rho = e.inverse() * mval.inverse() * diamond_right.scaled_left(c[i]).eval_left(lambda[i]);
        }
        out.reduced.left.push_back({e.inverse() * lambda[i] * e, rho});
    }
    for (std::size_t j : omega_s) {
        const R e = out.right_outer.eval_right(omega.at(j));
        if (e.is_zero())
            throw std::domain_error("class_reduce: outer right minimal polynomial vanishes in class");
        R gam = R::zero();
        if (!d.at(j).is_zero()) {
            const R mval = central_eval(m_left, omega[j]);
            if (mval.is_zero())
                throw std::domain_error("class_reduce: left outer multiple vanishes in class");
            gam = diamond_left.scaled_right(d[j]).eval_right(omega[j]) * mval.inverse() * e.inverse();
        }
        out.reduced.right.push_back({e * omega[j] * e.inverse(), gam});
    }
    return out;
}

template <DivisionRingElement R>
struct GeneralizedOutcome {
    std::optional<SkewPoly<R>> poly;
    std::optional<PairWitness> witness;  // original condition indices

    bool solvable() const { return poly.has_value(); }
};

// Generalized Lagrange formula: elementary pieces for nodes outside the
// shared classes plus one lifted block per class met by both sides.
template <DivisionRingElement R>
GeneralizedOutcome<R> generalized_lagrange(const TwoSidedProblem<R>& prob) {
    require_distinct_nodes(prob.left, "generalized_lagrange");
    require_distinct_nodes(prob.right, "generalized_lagrange");
    const auto lambda = nodes_of(prob.left);
    const auto omega = nodes_of(prob.right);
    const auto c = values_of(prob.left);
    const auto d = values_of(prob.right);
    if (!is_p_independent_left(lambda))
        throw dependent_nodes_error(
            "generalized_lagrange: left nodes are not P-independent; reduce first");
    if (!is_p_independent_right(omega))
        throw dependent_nodes_error(
            "generalized_lagrange: right nodes are not P-independent; reduce first");

    const auto p_lambda = minimal_poly_left(lambda).poly;
    const auto p_omega = minimal_poly_right(omega).poly;
    const auto parts = partition_by_class(lambda, omega);

    GeneralizedOutcome<R> out;
    SkewPoly<R> f;
    for (std::size_t i : parts.lambda0) {
        if (c[i].is_zero()) continue;
        auto pi = minimal_poly_left(detail::erase_index(lambda, i)).poly;
        f += pi * p_omega.scaled_left(elementary_left_coefficient(lambda, omega, i, c[i]));
    }
    for (std::size_t j : parts.omega0) {
        if (d[j].is_zero()) continue;
        auto qj = minimal_poly_right(detail::erase_index(omega, j)).poly;
        f += p_lambda * qj.scaled_left(elementary_right_coefficient(lambda, omega, j, d[j]));
    }
    for (const auto& cls : parts.shared) {
        auto red = class_reduce(cls.lambda_s, cls.omega_s, lambda, omega, c, d);
        auto sub = solve_two_sided(red.reduced);
        if (!sub.solvable()) {
            out.witness = PairWitness{cls.lambda_s[sub.witness->left_index],
                                      cls.omega_s[sub.witness->right_index]};
            return out;
        }
        f += red.left_outer * sub.family->base * red.right_outer;
    }
    out.poly = std::move(f);
    return out;
}

}  // namespace skl
