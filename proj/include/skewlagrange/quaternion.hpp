#pragma once

// Rational quaternions H(Q): the working division ring. Multiplication
// follows ij = k, jk = i, ki = j; the center is Q (the real axis).
// Conjugacy classes are cut out by (trace, norm): over Q, two quaternions
// are conjugate exactly when both invariants agree.

#include "skewlagrange/rational.hpp"

#include <array>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace skl {

class Quaternion {
public:
    using Scalar = Rational;
    static constexpr std::size_t coord_dim = 4;

    Quaternion() = default;
    Quaternion(Rational re, Rational i, Rational j, Rational k)
        : re_(std::move(re)), i_(std::move(i)), j_(std::move(j)), k_(std::move(k)) {}
    Quaternion(long n) : re_(n) {}
    explicit Quaternion(Rational re) : re_(std::move(re)) {}

    static Quaternion zero() { return {}; }
    static Quaternion one() { return Quaternion(1); }
    static Quaternion unit_i() { return {Rational(0), Rational(1), Rational(0), Rational(0)}; }
    static Quaternion unit_j() { return {Rational(0), Rational(0), Rational(1), Rational(0)}; }
    static Quaternion unit_k() { return {Rational(0), Rational(0), Rational(0), Rational(1)}; }
    static Quaternion from_scalar(const Rational& s) { return Quaternion(s); }

    const Rational& re() const { return re_; }
    const Rational& im_i() const { return i_; }
    const Rational& im_j() const { return j_; }
    const Rational& im_k() const { return k_; }

    bool is_zero() const { return re_.is_zero() && i_.is_zero() && j_.is_zero() && k_.is_zero(); }
    bool is_central() const { return i_.is_zero() && j_.is_zero() && k_.is_zero(); }

    Quaternion operator-() const { return {-re_, -i_, -j_, -k_}; }
    Quaternion operator+(const Quaternion& o) const {
        return {re_ + o.re_, i_ + o.i_, j_ + o.j_, k_ + o.k_};
    }
    Quaternion operator-(const Quaternion& o) const {
        return {re_ - o.re_, i_ - o.i_, j_ - o.j_, k_ - o.k_};
    }
    Quaternion operator*(const Quaternion& o) const {
        return {re_ * o.re_ - i_ * o.i_ - j_ * o.j_ - k_ * o.k_,
                re_ * o.i_ + i_ * o.re_ + j_ * o.k_ - k_ * o.j_,
                re_ * o.j_ - i_ * o.k_ + j_ * o.re_ + k_ * o.i_,
                re_ * o.k_ + i_ * o.j_ - j_ * o.i_ + k_ * o.re_};
    }
    Quaternion& operator+=(const Quaternion& o) { return *this = *this + o; }
    Quaternion& operator-=(const Quaternion& o) { return *this = *this - o; }
    Quaternion& operator*=(const Quaternion& o) { return *this = *this * o; }

    Quaternion conj() const { return {re_, -i_, -j_, -k_}; }

    // |q|^2 = q * conj(q); central, zero only at zero.
    Rational norm() const { return re_ * re_ + i_ * i_ + j_ * j_ + k_ * k_; }
    Rational trace() const { return re_ + re_; }

    Quaternion inverse() const {
        if (is_zero()) throw std::domain_error("Quaternion: inverse of zero");
        Rational n = norm().inverse();
        return {re_ * n, -(i_ * n), -(j_ * n), -(k_ * n)};
    }

    bool operator==(const Quaternion& o) const {
        return re_ == o.re_ && i_ == o.i_ && j_ == o.j_ && k_ == o.k_;
    }
    bool operator!=(const Quaternion& o) const { return !(*this == o); }

    // Conjugacy class test: equal trace and norm. Over Q this matches
    // existence of h != 0 with h a h^{-1} = b, central elements included.
    bool same_class_as(const Quaternion& o) const {
        return trace() == o.trace() && norm() == o.norm();
    }

    // Minimal central polynomial of the class, low to high:
    // z - a for central a, else z^2 - trace z + norm.
    std::vector<Rational> central_min_poly_coeffs() const {
        if (is_central()) return {-re_, Rational(1)};
        return {norm(), -trace(), Rational(1)};
    }

    std::vector<Rational> coords() const { return {re_, i_, j_, k_}; }
    static Quaternion from_coords(std::span<const Rational> c) {
        if (c.size() != 4) throw std::invalid_argument("Quaternion: bad coordinate count");
        return {c[0], c[1], c[2], c[3]};
    }

private:
    Rational re_, i_, j_, k_;
};

inline Quaternion operator*(const Rational& s, const Quaternion& q) {
    return Quaternion::from_scalar(s) * q;
}

// (trace, norm, kappa) invariants of a conjugacy class; kappa is the degree
// of the minimal central polynomial.
struct ConjugacyClassData {
    Rational trace;
    Rational norm;
    int kappa = 1;

    static ConjugacyClassData of(const Quaternion& q) {
        return {q.trace(), q.norm(), q.is_central() ? 1 : 2};
    }
    bool operator==(const ConjugacyClassData& o) const {
        return trace == o.trace && norm == o.norm && kappa == o.kappa;
    }
    // Deterministic class ordering used when assembling per-class blocks.
    bool operator<(const ConjugacyClassData& o) const {
        if (trace != o.trace) return trace < o.trace;
        return norm < o.norm;
    }
};

}  // namespace skl
