#pragma once

// Interpolation problem shapes shared by the solvers and the oracle.

#include "skewlagrange/ring.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace skl {

enum class Side { Left, Right };

template <DivisionRingElement R>
struct Condition {
    R node;
    R value;
};

template <DivisionRingElement R>
struct OneSidedProblem {
    Side side = Side::Left;
    std::vector<Condition<R>> conditions;
};

// Left and right conditions together; a node may appear on both sides,
// but nodes within one side must be pairwise distinct.
template <DivisionRingElement R>
struct TwoSidedProblem {
    std::vector<Condition<R>> left;
    std::vector<Condition<R>> right;
};

// Raised when a solver requires a P-independent node set but the input is
// dependent; consistency_reduce turns such inputs into reduced problems.
struct dependent_nodes_error : std::domain_error {
    using std::domain_error::domain_error;
};

template <DivisionRingElement R>
void require_distinct_nodes(const std::vector<Condition<R>>& conds, const char* what) {
    for (std::size_t a = 0; a < conds.size(); ++a)
        for (std::size_t b = a + 1; b < conds.size(); ++b)
            if (conds[a].node == conds[b].node)
                throw std::invalid_argument(std::string(what) + ": duplicate node");
}

template <DivisionRingElement R>
std::vector<R> nodes_of(const std::vector<Condition<R>>& conds) {
    std::vector<R> out;
    out.reserve(conds.size());
    for (const auto& c : conds) out.push_back(c.node);
    return out;
}

template <DivisionRingElement R>
std::vector<R> values_of(const std::vector<Condition<R>>& conds) {
    std::vector<R> out;
    out.reserve(conds.size());
    for (const auto& c : conds) out.push_back(c.value);
    return out;
}

}  // namespace skl
