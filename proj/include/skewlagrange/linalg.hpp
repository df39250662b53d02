#pragma once

// Exact linear algebra over Q: dense rational matrices, Gauss-Jordan
// reduction, affine solution sets (particular + nullspace basis). No
// pivoting heuristics are needed for correctness; the first nonzero entry
// is taken, which keeps results deterministic.

#include "skewlagrange/rational.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace skl {

class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

// All solutions of A x = rhs: empty (no particular), a point (empty
// nullspace), or an affine family. Residuals are exactly zero.
struct AffineSolutionSet {
    std::optional<std::vector<Rational>> particular;
    std::vector<std::vector<Rational>> nullspace;

    bool solvable() const { return particular.has_value(); }
    std::size_t dimension() const { return nullspace.size(); }
};

namespace detail {

// In-place RREF of [A | rhs...]; returns pivot column per row.
inline std::vector<std::size_t> rref(RatMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && m.at(p, col).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != row)
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.at(p, c), m.at(row, c));
        Rational inv = m.at(row, col).inverse();
        for (std::size_t c = col; c < m.cols(); ++c) m.at(row, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m.at(r, col).is_zero()) continue;
            Rational f = m.at(r, col);
            for (std::size_t c = col; c < m.cols(); ++c)
                m.at(r, c) -= f * m.at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace detail

// Exact affine solve of A x = rhs.
inline AffineSolutionSet solve_affine(const RatMatrix& a, const std::vector<Rational>& rhs) {
    if (rhs.size() != a.rows()) throw std::invalid_argument("solve_affine: rhs size mismatch");
    const std::size_t n = a.cols();
    RatMatrix m(a.rows(), n + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < n; ++c) m.at(r, c) = a.at(r, c);
        m.at(r, n) = rhs[r];
    }
    auto pivots = detail::rref(m);

    AffineSolutionSet out;
    // Inconsistent iff some pivot landed in the rhs column.
    if (!pivots.empty() && pivots.back() == n) return out;

    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    std::vector<Rational> x(n);
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = m.at(r, n);
    out.particular = std::move(x);

    for (std::size_t free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Rational> v(n);
        v[free_col] = Rational(1);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -m.at(r, free_col);
        out.nullspace.push_back(std::move(v));
    }
    return out;
}

// Basis of { x : A x = 0 }, scaled so the leading nonzero entry is positive.
inline std::vector<std::vector<Rational>> nullspace_basis(const RatMatrix& a) {
    auto sol = solve_affine(a, std::vector<Rational>(a.rows()));
    for (auto& v : sol.nullspace) {
        for (const auto& e : v) {
            if (e.is_zero()) continue;
            if (e.sign() < 0)
                for (auto& x : v) x = -x;
            break;
        }
    }
    return sol.nullspace;
}

// Coordinates of `target` in the span of `basis`, if it lies there.
inline std::optional<std::vector<Rational>> express_in_span(
    const std::vector<std::vector<Rational>>& basis, const std::vector<Rational>& target) {
    if (basis.empty()) {
        for (const auto& e : target)
            if (!e.is_zero()) return std::nullopt;
        return std::vector<Rational>{};
    }
    RatMatrix m(target.size(), basis.size());
    for (std::size_t c = 0; c < basis.size(); ++c) {
        if (basis[c].size() != target.size())
            throw std::invalid_argument("express_in_span: dimension mismatch");
        for (std::size_t r = 0; r < target.size(); ++r) m.at(r, c) = basis[c][r];
    }
    auto sol = solve_affine(m, target);
    if (!sol.solvable()) return std::nullopt;
    return *sol.particular;
}

}  // namespace skl
