#pragma once

// Exact rational scalars. Backed by GMP; every value is kept in canonical
// form (positive denominator, coprime numerator/denominator), so equality
// is plain component equality and arithmetic never loses precision.
//
// Rational doubles as the degenerate one-dimensional division-ring
// instance: it carries the same coordinate/conjugacy surface as Quaternion
// (see ring.hpp), with every element central and every conjugacy class a
// singleton.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace skl {

class Rational {
public:
    using Scalar = Rational;
    static constexpr std::size_t coord_dim = 1;

    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long n, long d) {
        if (d == 0) throw std::domain_error("Rational: zero denominator");
        v_ = mpq_class(n, d);
        v_.canonicalize();
    }
    explicit Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

    static Rational zero() { return Rational(); }
    static Rational one() { return Rational(1); }
    static Rational from_scalar(const Rational& s) { return s; }

    // Accepts "p" or "p/q" with optional leading sign; base 10 only.
    static std::optional<Rational> parse(std::string_view text);

    const mpq_class& raw() const { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_central() const { return true; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(mpq_class(v_ / o.v_));
    }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

    Rational inverse() const {
        if (is_zero()) throw std::domain_error("Rational: inverse of zero");
        return Rational(mpq_class(1 / v_));
    }

    bool operator==(const Rational& o) const { return mpq_equal(v_.get_mpq_t(), o.v_.get_mpq_t()) != 0; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const { return cmp(v_, o.v_) < 0; }
    bool operator<=(const Rational& o) const { return cmp(v_, o.v_) <= 0; }
    bool operator>(const Rational& o) const { return cmp(v_, o.v_) > 0; }
    bool operator>=(const Rational& o) const { return cmp(v_, o.v_) >= 0; }

    std::string str() const {
        std::string s = v_.get_num().get_str();
        if (v_.get_den() != 1) s += "/" + v_.get_den().get_str();
        return s;
    }

    // Division-ring element surface (see ring.hpp). Coordinate 0 is the
    // center embedding.
    std::vector<Rational> coords() const { return {*this}; }
    static Rational from_coords(std::span<const Rational> c) {
        if (c.size() != 1) throw std::invalid_argument("Rational: bad coordinate count");
        return c[0];
    }
    bool same_class_as(const Rational& o) const { return *this == o; }
    // Coefficients of the minimal central polynomial, low to high: z - a.
    std::vector<Rational> central_min_poly_coeffs() const { return {-*this, Rational(1)}; }

private:
    mpq_class v_;
};

inline Rational operator*(long n, const Rational& r) { return Rational(n) * r; }

// n! as an exact rational; used by the shift/derivative identities.
inline Rational factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(mpq_class(f));
}

inline Rational binomial(unsigned n, unsigned k) {
    if (k > n) return Rational(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rational(mpq_class(b));
}

inline std::optional<Rational> Rational::parse(std::string_view text) {
    auto parse_int = [](std::string_view& s) -> std::optional<mpz_class> {
        bool neg = false;
        if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
            neg = s.front() == '-';
            s.remove_prefix(1);
        }
        std::size_t n = 0;
        while (n < s.size() && s[n] >= '0' && s[n] <= '9') ++n;
        if (n == 0) return std::nullopt;
        mpz_class v(std::string(s.substr(0, n)), 10);
        s.remove_prefix(n);
        return neg ? mpz_class(-v) : v;
    };
    std::string_view rest = text;
    auto num = parse_int(rest);
    if (!num) return std::nullopt;
    mpz_class den = 1;
    if (!rest.empty() && rest.front() == '/') {
        rest.remove_prefix(1);
        auto d = parse_int(rest);
        if (!d || *d == 0) return std::nullopt;
        den = *d;
    }
    if (!rest.empty()) return std::nullopt;
    mpq_class q(*num, den);
    q.canonicalize();
    return Rational(std::move(q));
}

}  // namespace skl
