#pragma once

// Least common multiples of skew polynomials and minimal polynomials of
// node sets, built by the conjugate-and-append step: if the running
// minimal polynomial P does not left-vanish at the next node a, then
// P * (z - a~) with a~ = P^{el}(a)^{-1} a P^{el}(a) extends it and the node
// joins the P-basis; otherwise the node is redundant and is skipped.

#include "skewlagrange/linalg.hpp"
#include "skewlagrange/skew_poly.hpp"

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace skl {

template <DivisionRingElement R>
struct MinimalPolyResult {
    SkewPoly<R> poly;                  // monic; degree == basis.size()
    std::vector<std::size_t> basis;    // indices into the input, earliest kept
};

// Monic generator of the right ideal of polynomials left-vanishing on the
// whole node set. Ties break toward earlier nodes.
template <DivisionRingElement R>
MinimalPolyResult<R> minimal_poly_left(std::span<const R> nodes) {
    MinimalPolyResult<R> out;
    out.poly = SkewPoly<R>::one();
    for (std::size_t idx = 0; idx < nodes.size(); ++idx) {
        R e = out.poly.eval_left(nodes[idx]);
        if (e.is_zero()) continue;
        R twisted = e.inverse() * nodes[idx] * e;
        out.poly *= SkewPoly<R>::linear(twisted);
        out.basis.push_back(idx);
    }
    return out;
}

template <DivisionRingElement R>
MinimalPolyResult<R> minimal_poly_right(std::span<const R> nodes) {
    MinimalPolyResult<R> out;
    out.poly = SkewPoly<R>::one();
    for (std::size_t idx = 0; idx < nodes.size(); ++idx) {
        R e = out.poly.eval_right(nodes[idx]);
        if (e.is_zero()) continue;
        R twisted = e * nodes[idx] * e.inverse();
        out.poly = SkewPoly<R>::linear(twisted) * out.poly;
        out.basis.push_back(idx);
    }
    return out;
}

template <DivisionRingElement R>
MinimalPolyResult<R> minimal_poly_left(const std::vector<R>& nodes) {
    return minimal_poly_left(std::span<const R>(nodes));
}
template <DivisionRingElement R>
MinimalPolyResult<R> minimal_poly_right(const std::vector<R>& nodes) {
    return minimal_poly_right(std::span<const R>(nodes));
}

// deg P_{s,l} == |s|: target values on s can then be prescribed freely.
template <DivisionRingElement R>
bool is_p_independent_left(std::span<const R> nodes) {
    return minimal_poly_left(nodes).basis.size() == nodes.size();
}
template <DivisionRingElement R>
bool is_p_independent_right(std::span<const R> nodes) {
    return minimal_poly_right(nodes).basis.size() == nodes.size();
}
template <DivisionRingElement R>
bool is_p_independent_left(const std::vector<R>& nodes) {
    return is_p_independent_left(std::span<const R>(nodes));
}
template <DivisionRingElement R>
bool is_p_independent_right(const std::vector<R>& nodes) {
    return is_p_independent_right(std::span<const R>(nodes));
}

template <DivisionRingElement R>
bool in_left_zero_set(const SkewPoly<R>& f, const R& a) {
    return f.eval_left(a).is_zero();
}
template <DivisionRingElement R>
bool in_right_zero_set(const SkewPoly<R>& f, const R& a) {
    return f.eval_right(a).is_zero();
}

namespace detail {

// Common multiple search in center coordinates: the smallest m admitting
// monic a, b with f*a = g*b (or a*f = b*g) gives the lcm as f*a. The known
// top coefficients contribute the right-hand side of the linear system.
template <DivisionRingElement R>
SkewPoly<R> lcm_kernel_search(const SkewPoly<R>& f, const SkewPoly<R>& g, bool right_multiples) {
    constexpr std::size_t d = R::coord_dim;
    const long df = f.degree(), dg = g.degree();
    const long lo = std::max(df, dg), hi = df + dg;
    for (long m = lo; m <= hi; ++m) {
        const std::size_t na = static_cast<std::size_t>(m - df);  // unknown coeffs of a
        const std::size_t nb = static_cast<std::size_t>(m - dg);
        RatMatrix sys(static_cast<std::size_t>(m) * d, (na + nb) * d);
        std::vector<Rational> rhs(static_cast<std::size_t>(m) * d);
        auto add_block = [&](std::size_t row_block, std::size_t col_block, const RatMatrix& blk,
                             int sign) {
            for (std::size_t r = 0; r < d; ++r)
                for (std::size_t c = 0; c < d; ++c) {
                    auto& cell = sys.at(row_block * d + r, col_block * d + c);
                    cell = sign > 0 ? cell + blk.at(r, c) : cell - blk.at(r, c);
                }
        };
        auto add_rhs = [&](std::size_t row_block, const R& v, int sign) {
            auto co = v.coords();
            for (std::size_t r = 0; r < d; ++r)
                rhs[row_block * d + r] += sign > 0 ? co[r] : -co[r];
        };
        // Unknown coefficient v at power w contributes f_u * v (right
        // multiples) or v * f_u (left multiples) to the power u + w.
        for (long p = 0; p < m; ++p) {
            for (long u = 0; u <= std::min<long>(df, p); ++u) {
                const long w = p - u;
                const R& fu = f.coeffs()[static_cast<std::size_t>(u)];
                if (w < static_cast<long>(na)) {
                    auto blk = right_multiples ? left_mul_matrix(fu) : right_mul_matrix(fu);
                    add_block(static_cast<std::size_t>(p), static_cast<std::size_t>(w), blk, +1);
                } else if (w == static_cast<long>(na)) {
                    add_rhs(static_cast<std::size_t>(p), fu, -1);  // a_top = 1
                }
            }
            for (long u = 0; u <= std::min<long>(dg, p); ++u) {
                const long w = p - u;
                const R& gu = g.coeffs()[static_cast<std::size_t>(u)];
                if (w < static_cast<long>(nb)) {
                    auto blk = right_multiples ? left_mul_matrix(gu) : right_mul_matrix(gu);
                    add_block(static_cast<std::size_t>(p), na + static_cast<std::size_t>(w), blk, -1);
                } else if (w == static_cast<long>(nb)) {
                    add_rhs(static_cast<std::size_t>(p), gu, +1);  // b_top = 1
                }
            }
        }
        auto sol = solve_affine(sys, rhs);
        if (!sol.solvable()) continue;
        std::vector<R> acoeffs;
        for (std::size_t w = 0; w < na; ++w) {
            std::span<const Rational> cs(sol.particular->data() + w * d, d);
            acoeffs.push_back(R::from_coords(cs));
        }
        acoeffs.push_back(R::one());
        SkewPoly<R> a(std::move(acoeffs));
        return right_multiples ? f * a : a * f;
    }
    throw std::logic_error("lcm_kernel_search: no common multiple below degree bound");
}

}  // namespace detail

// Monic generator of <f>_r intersect <g>_r. Inputs must be monic.
template <DivisionRingElement R>
SkewPoly<R> lrcm(const SkewPoly<R>& f, const SkewPoly<R>& g) {
    if (!f.is_monic() || !g.is_monic()) throw std::domain_error("lrcm: inputs must be monic");
    if (f == g) return f;
    return detail::lcm_kernel_search(f, g, /*right_multiples=*/true);
}

// Monic generator of <f>_l intersect <g>_l.
template <DivisionRingElement R>
SkewPoly<R> llcm(const SkewPoly<R>& f, const SkewPoly<R>& g) {
    if (!f.is_monic() || !g.is_monic()) throw std::domain_error("llcm: inputs must be monic");
    if (f == g) return f;
    return detail::lcm_kernel_search(f, g, /*right_multiples=*/false);
}

// f in P * F[z] * Q, checked by two-sided division.
template <DivisionRingElement R>
bool in_product_ideal(const SkewPoly<R>& f, const SkewPoly<R>& left_modulus,
                      const SkewPoly<R>& right_modulus) {
    if (f.is_zero()) return true;
    auto dl = divide_left(f, left_modulus);
    if (!dl.remainder.is_zero()) return false;
    return divide_right(dl.quotient, right_modulus).remainder.is_zero();
}

}  // namespace skl
