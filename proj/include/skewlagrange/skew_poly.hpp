#pragma once

// Polynomials over a division ring with a central variable: f(z) = sum_j
// z^j f_j with coefficients kept on the right of z^j. Left/right evaluation
// are the remainders of division by z - a on the respective side; L_a and
// R_a are the matching quotients (backward shifts).
//
// SkewPoly<Rational> is the commutative ring Q[z]; CentralPoly aliases it
// and carries the central-coefficient utilities (gcd, evaluation inside a
// larger ring, embedding).

#include "skewlagrange/ring.hpp"

#include <cstddef>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

namespace skl {

// Degree of the zero polynomial; compares below every attainable degree,
// so "deg r < deg d" holds uniformly for remainders.
inline constexpr long kZeroPolyDegree = std::numeric_limits<long>::min();

template <DivisionRingElement R>
class SkewPoly {
public:
    SkewPoly() = default;
    explicit SkewPoly(std::vector<R> coeffs) : c_(std::move(coeffs)) { normalize(); }

    static SkewPoly zero() { return {}; }
    static SkewPoly one() { return constant(R::one()); }
    static SkewPoly constant(R v) {
        SkewPoly p;
        p.c_.push_back(std::move(v));
        p.normalize();
        return p;
    }
    // rho_a(z) = z - a.
    static SkewPoly linear(const R& a) { return SkewPoly(std::vector<R>{-a, R::one()}); }
    static SkewPoly variable() { return linear(R::zero()); }
    // z^m c.
    static SkewPoly monomial(std::size_t m, R c) {
        std::vector<R> v(m + 1, R::zero());
        v[m] = std::move(c);
        return SkewPoly(std::move(v));
    }

    bool is_zero() const { return c_.empty(); }
    long degree() const { return c_.empty() ? kZeroPolyDegree : static_cast<long>(c_.size()) - 1; }
    const std::vector<R>& coeffs() const { return c_; }
    R coeff(std::size_t j) const { return j < c_.size() ? c_[j] : R::zero(); }
    const R& lead() const {
        if (c_.empty()) throw std::domain_error("SkewPoly: leading coefficient of zero");
        return c_.back();
    }
    bool is_monic() const { return !c_.empty() && c_.back() == R::one(); }
    bool is_central() const {
        for (const auto& c : c_)
            if (!c.is_central()) return false;
        return true;
    }

    SkewPoly operator-() const {
        std::vector<R> v;
        v.reserve(c_.size());
        for (const auto& c : c_) v.push_back(-c);
        return SkewPoly(std::move(v));
    }
    SkewPoly operator+(const SkewPoly& o) const {
        std::vector<R> v(std::max(c_.size(), o.c_.size()), R::zero());
        for (std::size_t j = 0; j < v.size(); ++j) v[j] = coeff(j) + o.coeff(j);
        return SkewPoly(std::move(v));
    }
    SkewPoly operator-(const SkewPoly& o) const { return *this + (-o); }
    SkewPoly operator*(const SkewPoly& o) const {
        if (is_zero() || o.is_zero()) return {};
        std::vector<R> v(c_.size() + o.c_.size() - 1, R::zero());
        for (std::size_t u = 0; u < c_.size(); ++u)
            for (std::size_t w = 0; w < o.c_.size(); ++w)
                v[u + w] = v[u + w] + c_[u] * o.c_[w];
        return SkewPoly(std::move(v));
    }
    SkewPoly& operator+=(const SkewPoly& o) { return *this = *this + o; }
    SkewPoly& operator-=(const SkewPoly& o) { return *this = *this - o; }
    SkewPoly& operator*=(const SkewPoly& o) { return *this = *this * o; }

    bool operator==(const SkewPoly& o) const { return c_ == o.c_; }
    bool operator!=(const SkewPoly& o) const { return !(*this == o); }

    // c * f: multiplies every coefficient on the left.
    SkewPoly scaled_left(const R& s) const {
        std::vector<R> v;
        v.reserve(c_.size());
        for (const auto& c : c_) v.push_back(s * c);
        return SkewPoly(std::move(v));
    }
    // f * c.
    SkewPoly scaled_right(const R& s) const {
        std::vector<R> v;
        v.reserve(c_.size());
        for (const auto& c : c_) v.push_back(c * s);
        return SkewPoly(std::move(v));
    }

    // f^{el}(a) = sum a^j f_j.
    R eval_left(const R& a) const {
        R acc = R::zero();
        for (std::size_t j = c_.size(); j-- > 0;) acc = a * acc + c_[j];
        return acc;
    }
    // f^{er}(a) = sum f_j a^j.
    R eval_right(const R& a) const {
        R acc = R::zero();
        for (std::size_t j = c_.size(); j-- > 0;) acc = acc * a + c_[j];
        return acc;
    }

    SkewPoly derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<R> v(c_.size() - 1, R::zero());
        for (std::size_t j = 1; j < c_.size(); ++j)
            v[j - 1] = R::from_scalar(Rational(static_cast<long>(j))) * c_[j];
        return SkewPoly(std::move(v));
    }
    SkewPoly derivative(unsigned order) const {
        SkewPoly d = *this;
        for (unsigned t = 0; t < order; ++t) d = d.derivative();
        return d;
    }

private:
    void normalize() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<R> c_;  // c_[j] is the coefficient of z^j
};

// L_a f: the quotient in f = f^{el}(a) + (z - a) (L_a f).
template <DivisionRingElement R>
SkewPoly<R> shift_left(const R& a, const SkewPoly<R>& f) {
    const auto& c = f.coeffs();
    if (c.size() <= 1) return {};
    std::vector<R> g(c.size() - 1, R::zero());
    g[c.size() - 2] = c.back();
    for (std::size_t j = c.size() - 2; j-- > 0;) g[j] = c[j + 1] + a * g[j + 1];
    return SkewPoly<R>(std::move(g));
}

// R_a f: the quotient in f = f^{er}(a) + (R_a f) (z - a).
template <DivisionRingElement R>
SkewPoly<R> shift_right(const R& a, const SkewPoly<R>& f) {
    const auto& c = f.coeffs();
    if (c.size() <= 1) return {};
    std::vector<R> g(c.size() - 1, R::zero());
    g[c.size() - 2] = c.back();
    for (std::size_t j = c.size() - 2; j-- > 0;) g[j] = c[j + 1] + g[j + 1] * a;
    return SkewPoly<R>(std::move(g));
}

template <DivisionRingElement R>
struct DivisionResult {
    SkewPoly<R> quotient;
    SkewPoly<R> remainder;
};

// f = d * q + r with deg r < deg d.
template <DivisionRingElement R>
DivisionResult<R> divide_left(const SkewPoly<R>& f, const SkewPoly<R>& d) {
    if (d.is_zero()) throw std::domain_error("divide_left: zero divisor");
    SkewPoly<R> q, r = f;
    const R lead_inv = d.lead().inverse();
    while (!r.is_zero() && r.degree() >= d.degree()) {
        const std::size_t m = static_cast<std::size_t>(r.degree() - d.degree());
        auto t = SkewPoly<R>::monomial(m, lead_inv * r.lead());
        q += t;
        r -= d * t;
    }
    return {std::move(q), std::move(r)};
}

// f = q * d + r with deg r < deg d.
template <DivisionRingElement R>
DivisionResult<R> divide_right(const SkewPoly<R>& f, const SkewPoly<R>& d) {
    if (d.is_zero()) throw std::domain_error("divide_right: zero divisor");
    SkewPoly<R> q, r = f;
    const R lead_inv = d.lead().inverse();
    while (!r.is_zero() && r.degree() >= d.degree()) {
        const std::size_t m = static_cast<std::size_t>(r.degree() - d.degree());
        auto t = SkewPoly<R>::monomial(m, r.lead() * lead_inv);
        q += t;
        r -= t * d;
    }
    return {std::move(q), std::move(r)};
}

/* ---- central polynomials ---- */

using CentralPoly = SkewPoly<Rational>;

// Central coefficients into a larger ring; left and right values coincide
// on the result.
template <DivisionRingElement R>
SkewPoly<R> embed_central(const CentralPoly& p) {
    std::vector<R> v;
    v.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) v.push_back(R::from_scalar(c));
    return SkewPoly<R>(std::move(v));
}

template <DivisionRingElement R>
R central_eval(const CentralPoly& p, const R& a) {
    R acc = R::zero();
    const auto& c = p.coeffs();
    for (std::size_t j = c.size(); j-- > 0;) acc = acc * a + R::from_scalar(c[j]);
    return acc;
}

// Minimal central polynomial of the conjugacy class of a.
template <DivisionRingElement R>
CentralPoly central_min_poly(const R& a) {
    return CentralPoly(a.central_min_poly_coeffs());
}

inline CentralPoly monic(const CentralPoly& p) {
    if (p.is_zero()) throw std::domain_error("monic: zero polynomial");
    return p.scaled_right(p.lead().inverse());
}

inline CentralPoly central_gcd(CentralPoly a, CentralPoly b) {
    while (!b.is_zero()) {
        auto r = divide_left(a, b).remainder;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return monic(a);
}

// Exact quotient; throws if the division leaves a remainder.
inline CentralPoly central_divexact(const CentralPoly& a, const CentralPoly& b) {
    auto d = divide_left(a, b);
    if (!d.remainder.is_zero()) throw std::domain_error("central_divexact: not divisible");
    return d.quotient;
}

}  // namespace skl
