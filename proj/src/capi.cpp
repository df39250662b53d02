#include "skewlagrange.h"

#include "skewlagrange/bounded.hpp"
#include "skewlagrange/interpolate.hpp"
#include "skewlagrange/oracle.hpp"
#include "skewlagrange/parse.hpp"
#include "skewlagrange/random_gen.hpp"
#include "skewlagrange/sylvester.hpp"
#include "skewlagrange/two_sided.hpp"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <limits>
#include <new>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

using skl::Quaternion;
using skl::Side;
using QPoly = skl::SkewPoly<Quaternion>;

struct slq_quat {
    Quaternion v;
};
struct slq_poly {
    QPoly v;
};
struct slq_problem {
    skl::TwoSidedProblem<Quaternion> v;
};
struct slq_sylvester {
    skl::SylvesterSolution<Quaternion> v;
};
struct slq_solution {
    int status = SLQ_OK;
    std::optional<QPoly> poly;
    std::vector<QPoly> basis;
    std::optional<QPoly> left_modulus, right_modulus;
    std::optional<std::pair<std::size_t, std::size_t>> witness;
    std::vector<std::size_t> dropped_left, dropped_right;
    struct Forced {
        std::size_t right_index;
        Quaternion value;
        bool consistent;
    };
    std::vector<Forced> forced;
    long dimension = -2;  // only meaningful for oracle solutions
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& msg) { g_last_error = msg; }

// Maps C++ exceptions from the core onto status codes.
template <class Fn>
int guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const std::domain_error& e) {
        set_error(e.what());
        return SLQ_DOMAIN_ERROR;
    } catch (const std::invalid_argument& e) {
        set_error(e.what());
        return SLQ_PARSE_ERROR;
    } catch (const std::exception& e) {
        set_error(e.what());
        return SLQ_ERROR;
    } catch (...) {
        set_error("unknown failure");
        return SLQ_ERROR;
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

std::vector<Quaternion> gather(const slq_quat* const* items, std::size_t n) {
    std::vector<Quaternion> out;
    out.reserve(n);
    for (std::size_t t = 0; t < n; ++t) {
        if (!items[t]) throw std::invalid_argument("null quaternion handle");
        out.push_back(items[t]->v);
    }
    return out;
}

// Runs one solve kind against a (possibly reduced) problem, mapping all
// reported indices back to the caller's numbering.
slq_solution run_solve(const skl::TwoSidedProblem<Quaternion>& input, int kind, bool reduce) {
    slq_solution sol;
    skl::TwoSidedProblem<Quaternion> prob = input;
    std::vector<std::size_t> left_map(input.left.size()), right_map(input.right.size());
    for (std::size_t t = 0; t < left_map.size(); ++t) left_map[t] = t;
    for (std::size_t t = 0; t < right_map.size(); ++t) right_map[t] = t;

    auto reduce_side = [&](bool left_side) -> bool {
        skl::OneSidedProblem<Quaternion> one;
        one.side = left_side ? Side::Left : Side::Right;
        one.conditions = left_side ? prob.left : prob.right;
        auto red = skl::consistency_reduce(one);
        auto& map = left_side ? left_map : right_map;
        auto& dropped = left_side ? sol.dropped_left : sol.dropped_right;
        if (!red.consistent) {
            sol.status = SLQ_INCONSISTENT;
            sol.witness =
                left_side
                    ? std::make_pair(map[red.witness], std::numeric_limits<std::size_t>::max())
                    : std::make_pair(std::numeric_limits<std::size_t>::max(), map[red.witness]);
            return false;
        }
        std::vector<bool> kept(one.conditions.size(), false);
        for (std::size_t idx : red.basis) kept[idx] = true;
        for (std::size_t idx = 0; idx < one.conditions.size(); ++idx)
            if (!kept[idx]) dropped.push_back(map[idx]);
        std::vector<std::size_t> new_map;
        for (std::size_t idx : red.basis) new_map.push_back(map[idx]);
        map = std::move(new_map);
        (left_side ? prob.left : prob.right) = red.reduced.conditions;
        return true;
    };

    if (reduce) {
        const bool need_left = kind != SLQ_SOLVE_RIGHT;
        const bool need_right = kind != SLQ_SOLVE_LEFT;
        if (need_left && !reduce_side(true)) return sol;
        if (need_right && !reduce_side(false)) return sol;
    }

    switch (kind) {
        case SLQ_SOLVE_LEFT: {
            auto fam = skl::lagrange_family(
                skl::OneSidedProblem<Quaternion>{Side::Left, prob.left});
            sol.poly = std::move(fam.particular);
            sol.left_modulus = std::move(fam.modulus_left);
            break;
        }
        case SLQ_SOLVE_RIGHT: {
            auto fam = skl::lagrange_family(
                skl::OneSidedProblem<Quaternion>{Side::Right, prob.right});
            sol.poly = std::move(fam.particular);
            sol.right_modulus = std::move(fam.modulus_right);
            break;
        }
        case SLQ_SOLVE_TWO_SIDED: {
            auto out = skl::solve_two_sided(prob);
            for (const auto& fc : skl::within_class_redundancy(prob))
                sol.forced.push_back({right_map[fc.right_index], fc.forced_value, fc.consistent});
            if (!out.solvable()) {
                sol.status = SLQ_INCONSISTENT;
                sol.witness = {left_map[out.witness->left_index],
                               right_map[out.witness->right_index]};
                return sol;
            }
            sol.poly = out.family->base;
            sol.basis = out.family->homogeneous_basis;
            sol.left_modulus = out.family->left_modulus;
            sol.right_modulus = out.family->right_modulus;
            break;
        }
        case SLQ_SOLVE_GENERALIZED: {
            auto out = skl::generalized_lagrange(prob);
            for (const auto& fc : skl::within_class_redundancy(prob))
                sol.forced.push_back({right_map[fc.right_index], fc.forced_value, fc.consistent});
            if (!out.solvable()) {
                sol.status = SLQ_INCONSISTENT;
                sol.witness = {left_map[out.witness->left_index],
                               right_map[out.witness->right_index]};
                return sol;
            }
            sol.poly = *out.poly;
            sol.left_modulus = skl::minimal_poly_left(nodes_of(prob.left)).poly;
            sol.right_modulus = skl::minimal_poly_right(nodes_of(prob.right)).poly;
            break;
        }
        default:
            throw std::invalid_argument("slq_solve: unknown solve kind");
    }
    return sol;
}

}  // namespace

extern "C" {

const char* slq_last_error(void) { return g_last_error.c_str(); }

void slq_string_free(char* s) { std::free(s); }

/* ---- quaternions ---- */

int slq_quat_parse(const char* text, slq_quat** out) {
    return guarded([&] {
        if (!text || !out) throw std::invalid_argument("null argument");
        *out = new slq_quat{skl::parse_quaternion(text)};
        return SLQ_OK;
    });
}

slq_quat* slq_quat_clone(const slq_quat* q) { return q ? new slq_quat{q->v} : nullptr; }

void slq_quat_free(slq_quat* q) { delete q; }

char* slq_quat_format(const slq_quat* q) {
    return q ? dup_string(skl::format_quaternion(q->v)) : nullptr;
}

#define SLQ_QUAT_BINOP(name, expr)                                     \
    int name(const slq_quat* a, const slq_quat* b, slq_quat** out) {   \
        return guarded([&] {                                           \
            if (!a || !b || !out) throw std::invalid_argument("null"); \
            *out = new slq_quat{expr};                                 \
            return SLQ_OK;                                             \
        });                                                            \
    }

SLQ_QUAT_BINOP(slq_quat_add, a->v + b->v)
SLQ_QUAT_BINOP(slq_quat_sub, a->v - b->v)
SLQ_QUAT_BINOP(slq_quat_mul, a->v * b->v)
#undef SLQ_QUAT_BINOP

int slq_quat_inverse(const slq_quat* a, slq_quat** out) {
    return guarded([&] {
        if (!a || !out) throw std::invalid_argument("null");
        *out = new slq_quat{a->v.inverse()};
        return SLQ_OK;
    });
}

int slq_quat_conjugate(const slq_quat* a, slq_quat** out) {
    return guarded([&] {
        if (!a || !out) throw std::invalid_argument("null");
        *out = new slq_quat{a->v.conj()};
        return SLQ_OK;
    });
}

int slq_quat_is_zero(const slq_quat* a) { return a && a->v.is_zero() ? 1 : 0; }
int slq_quat_is_central(const slq_quat* a) { return a && a->v.is_central() ? 1 : 0; }
int slq_quat_equal(const slq_quat* a, const slq_quat* b) { return a && b && a->v == b->v ? 1 : 0; }
int slq_quat_conjugate_test(const slq_quat* a, const slq_quat* b) {
    return a && b && a->v.same_class_as(b->v) ? 1 : 0;
}

int slq_quat_class_poly(const slq_quat* a, slq_poly** out) {
    return guarded([&] {
        if (!a || !out) throw std::invalid_argument("null");
        *out = new slq_poly{skl::embed_central<Quaternion>(skl::central_min_poly(a->v))};
        return SLQ_OK;
    });
}

/* ---- polynomials ---- */

int slq_poly_parse(const char* text, slq_poly** out) {
    return guarded([&] {
        if (!text || !out) throw std::invalid_argument("null argument");
        *out = new slq_poly{skl::parse_poly(text)};
        return SLQ_OK;
    });
}

slq_poly* slq_poly_clone(const slq_poly* f) { return f ? new slq_poly{f->v} : nullptr; }

void slq_poly_free(slq_poly* f) { delete f; }

char* slq_poly_format(const slq_poly* f) { return f ? dup_string(skl::format_poly(f->v)) : nullptr; }

#define SLQ_POLY_BINOP(name, expr)                                     \
    int name(const slq_poly* f, const slq_poly* g, slq_poly** out) {   \
        return guarded([&] {                                           \
            if (!f || !g || !out) throw std::invalid_argument("null"); \
            *out = new slq_poly{expr};                                 \
            return SLQ_OK;                                             \
        });                                                            \
    }

SLQ_POLY_BINOP(slq_poly_add, f->v + g->v)
SLQ_POLY_BINOP(slq_poly_sub, f->v - g->v)
SLQ_POLY_BINOP(slq_poly_mul, f->v * g->v)
#undef SLQ_POLY_BINOP

int slq_poly_scale(const slq_quat* c, const slq_poly* f, int side, slq_poly** out) {
    return guarded([&] {
        if (!c || !f || !out) throw std::invalid_argument("null");
        *out = new slq_poly{side == SLQ_LEFT ? f->v.scaled_left(c->v) : f->v.scaled_right(c->v)};
        return SLQ_OK;
    });
}

long slq_poly_degree(const slq_poly* f) {
    if (!f || f->v.is_zero()) return SLQ_DEGREE_ZERO_POLY;
    return f->v.degree();
}

size_t slq_poly_coeff_count(const slq_poly* f) { return f ? f->v.coeffs().size() : 0; }

int slq_poly_coeff(const slq_poly* f, size_t power, slq_quat** out) {
    return guarded([&] {
        if (!f || !out) throw std::invalid_argument("null");
        *out = new slq_quat{f->v.coeff(power)};
        return SLQ_OK;
    });
}

int slq_poly_eval_left(const slq_poly* f, const slq_quat* a, slq_quat** out) {
    return guarded([&] {
        if (!f || !a || !out) throw std::invalid_argument("null");
        *out = new slq_quat{f->v.eval_left(a->v)};
        return SLQ_OK;
    });
}

int slq_poly_eval_right(const slq_poly* f, const slq_quat* a, slq_quat** out) {
    return guarded([&] {
        if (!f || !a || !out) throw std::invalid_argument("null");
        *out = new slq_quat{f->v.eval_right(a->v)};
        return SLQ_OK;
    });
}

/* ---- node-set operations ---- */

int slq_minimal_poly(const slq_quat* const* nodes, size_t n, int side, slq_poly** out_poly,
                     size_t* basis_indices, size_t* basis_len) {
    return guarded([&] {
        if ((!nodes && n) || !out_poly) throw std::invalid_argument("null argument");
        auto ns = gather(nodes, n);
        auto mp = side == SLQ_LEFT ? skl::minimal_poly_left(ns) : skl::minimal_poly_right(ns);
        *out_poly = new slq_poly{std::move(mp.poly)};
        if (basis_len) *basis_len = mp.basis.size();
        if (basis_indices)
            for (std::size_t t = 0; t < mp.basis.size(); ++t) basis_indices[t] = mp.basis[t];
        return SLQ_OK;
    });
}

int slq_p_independent(const slq_quat* const* nodes, size_t n, int side, int* out) {
    return guarded([&] {
        if ((!nodes && n) || !out) throw std::invalid_argument("null argument");
        auto ns = gather(nodes, n);
        *out = (side == SLQ_LEFT ? skl::is_p_independent_left(ns)
                                 : skl::is_p_independent_right(ns))
                   ? 1
                   : 0;
        return SLQ_OK;
    });
}

int slq_two_sided_p_independent(const slq_quat* const* left, size_t n,
                                const slq_quat* const* right, size_t k, int* out) {
    return guarded([&] {
        if ((!left && n) || (!right && k) || !out) throw std::invalid_argument("null argument");
        *out = skl::two_sided_p_independent(gather(left, n), gather(right, k)) ? 1 : 0;
        return SLQ_OK;
    });
}

int slq_extend_in_class(const slq_quat* const* basis_nodes, const slq_quat* const* basis_values,
                        size_t n, const slq_quat* target, int side, slq_quat** out) {
    return guarded([&] {
        if (!basis_nodes || !basis_values || !target || !out)
            throw std::invalid_argument("null argument");
        auto value = skl::extend_in_class(gather(basis_nodes, n), gather(basis_values, n),
                                          target->v, side == SLQ_LEFT ? Side::Left : Side::Right);
        *out = new slq_quat{std::move(value)};
        return SLQ_OK;
    });
}

/* ---- Sylvester ---- */

int slq_sylvester_solve(const slq_quat* a, const slq_quat* b, const slq_quat* g,
                        slq_sylvester** out) {
    return guarded([&] {
        if (!a || !b || !g || !out) throw std::invalid_argument("null argument");
        *out = new slq_sylvester{skl::solve_sylvester(a->v, b->v, g->v)};
        return SLQ_OK;
    });
}

int slq_sylvester_oracle(const slq_quat* a, const slq_quat* b, const slq_quat* g,
                         slq_sylvester** out) {
    return guarded([&] {
        if (!a || !b || !g || !out) throw std::invalid_argument("null argument");
        auto set = skl::oracle_sylvester(a->v, b->v, g->v);
        skl::SylvesterSolution<Quaternion> sol;
        if (!set.solvable()) {
            sol.status = skl::SylvesterStatus::Unsolvable;
        } else {
            sol.status = set.nullspace.empty() ? skl::SylvesterStatus::Unique
                                               : skl::SylvesterStatus::Affine;
            sol.particular = Quaternion::from_coords(*set.particular);
            for (const auto& v : set.nullspace) sol.basis.push_back(Quaternion::from_coords(v));
        }
        *out = new slq_sylvester{std::move(sol)};
        return SLQ_OK;
    });
}

void slq_sylvester_free(slq_sylvester* s) { delete s; }

int slq_sylvester_status(const slq_sylvester* s) {
    if (!s) return SLQ_SYLVESTER_UNSOLVABLE;
    switch (s->v.status) {
        case skl::SylvesterStatus::Unique: return SLQ_SYLVESTER_UNIQUE;
        case skl::SylvesterStatus::Affine: return SLQ_SYLVESTER_AFFINE;
        default: return SLQ_SYLVESTER_UNSOLVABLE;
    }
}

int slq_sylvester_particular(const slq_sylvester* s, slq_quat** out) {
    return guarded([&] {
        if (!s || !out) throw std::invalid_argument("null argument");
        if (!s->v.particular) throw std::domain_error("no particular solution: unsolvable");
        *out = new slq_quat{*s->v.particular};
        return SLQ_OK;
    });
}

size_t slq_sylvester_basis_size(const slq_sylvester* s) { return s ? s->v.basis.size() : 0; }

int slq_sylvester_basis_get(const slq_sylvester* s, size_t idx, slq_quat** out) {
    return guarded([&] {
        if (!s || !out || idx >= s->v.basis.size()) throw std::invalid_argument("bad basis index");
        *out = new slq_quat{s->v.basis[idx]};
        return SLQ_OK;
    });
}

/* ---- interpolation ---- */

slq_problem* slq_problem_new(void) { return new (std::nothrow) slq_problem{}; }

void slq_problem_free(slq_problem* p) { delete p; }

int slq_problem_add_left(slq_problem* p, const slq_quat* node, const slq_quat* value) {
    return guarded([&] {
        if (!p || !node || !value) throw std::invalid_argument("null argument");
        for (const auto& c : p->v.left)
            if (c.node == node->v) throw std::invalid_argument("duplicate left node");
        p->v.left.push_back({node->v, value->v});
        return SLQ_OK;
    });
}

int slq_problem_add_right(slq_problem* p, const slq_quat* node, const slq_quat* value) {
    return guarded([&] {
        if (!p || !node || !value) throw std::invalid_argument("null argument");
        for (const auto& c : p->v.right)
            if (c.node == node->v) throw std::invalid_argument("duplicate right node");
        p->v.right.push_back({node->v, value->v});
        return SLQ_OK;
    });
}

size_t slq_problem_left_size(const slq_problem* p) { return p ? p->v.left.size() : 0; }
size_t slq_problem_right_size(const slq_problem* p) { return p ? p->v.right.size() : 0; }

int slq_solve(const slq_problem* p, int kind, int reduce, slq_solution** out) {
    return guarded([&] {
        if (!p || !out) throw std::invalid_argument("null argument");
        if (kind == SLQ_SOLVE_LEFT && !p->v.right.empty())
            throw std::invalid_argument("left solve: problem has right conditions");
        if (kind == SLQ_SOLVE_RIGHT && !p->v.left.empty())
            throw std::invalid_argument("right solve: problem has left conditions");
        *out = new slq_solution{run_solve(p->v, kind, reduce != 0)};
        return SLQ_OK;
    });
}

int slq_oracle_interpolate(const slq_problem* p, long degree_bound, slq_solution** out) {
    return guarded([&] {
        if (!p || !out) throw std::invalid_argument("null argument");
        if (degree_bound < 0) throw std::invalid_argument("negative degree bound");
        auto set =
            skl::oracle_interpolate(skl::OracleProblem<Quaternion>::from(p->v), degree_bound);
        slq_solution sol;
        if (!set.solvable()) {
            sol.status = SLQ_INCONSISTENT;
            sol.dimension = -1;
        } else {
            sol.poly = skl::poly_from_coord_vec<Quaternion>(*set.particular);
            for (const auto& v : set.nullspace)
                sol.basis.push_back(skl::poly_from_coord_vec<Quaternion>(v));
            sol.dimension = static_cast<long>(set.dimension());
        }
        *out = new slq_solution{std::move(sol)};
        return SLQ_OK;
    });
}

void slq_solution_free(slq_solution* s) { delete s; }

int slq_solution_status(const slq_solution* s) { return s ? s->status : SLQ_ERROR; }

int slq_solution_poly(const slq_solution* s, slq_poly** out) {
    return guarded([&] {
        if (!s || !out) throw std::invalid_argument("null argument");
        if (!s->poly) throw std::domain_error("no solution polynomial");
        *out = new slq_poly{*s->poly};
        return SLQ_OK;
    });
}

size_t slq_solution_basis_size(const slq_solution* s) { return s ? s->basis.size() : 0; }

int slq_solution_basis_get(const slq_solution* s, size_t idx, slq_poly** out) {
    return guarded([&] {
        if (!s || !out || idx >= s->basis.size()) throw std::invalid_argument("bad basis index");
        *out = new slq_poly{s->basis[idx]};
        return SLQ_OK;
    });
}

int slq_solution_modulus(const slq_solution* s, int side, slq_poly** out) {
    return guarded([&] {
        if (!s || !out) throw std::invalid_argument("null argument");
        const auto& m = side == SLQ_LEFT ? s->left_modulus : s->right_modulus;
        if (!m) throw std::domain_error("modulus not available for this solution");
        *out = new slq_poly{*m};
        return SLQ_OK;
    });
}

int slq_solution_witness(const slq_solution* s, size_t* left_index, size_t* right_index) {
    return guarded([&] {
        if (!s) throw std::invalid_argument("null argument");
        if (!s->witness) throw std::domain_error("solution has no witness");
        if (left_index) *left_index = s->witness->first;
        if (right_index) *right_index = s->witness->second;
        return SLQ_OK;
    });
}

size_t slq_solution_dropped_size(const slq_solution* s, int side) {
    if (!s) return 0;
    return side == SLQ_LEFT ? s->dropped_left.size() : s->dropped_right.size();
}

int slq_solution_dropped_get(const slq_solution* s, int side, size_t idx, size_t* out_index) {
    return guarded([&] {
        if (!s || !out_index) throw std::invalid_argument("null argument");
        const auto& v = side == SLQ_LEFT ? s->dropped_left : s->dropped_right;
        if (idx >= v.size()) throw std::invalid_argument("bad dropped index");
        *out_index = v[idx];
        return SLQ_OK;
    });
}

size_t slq_solution_forced_size(const slq_solution* s) { return s ? s->forced.size() : 0; }

int slq_solution_forced_get(const slq_solution* s, size_t idx, size_t* right_index,
                            slq_quat** forced_value, int* consistent) {
    return guarded([&] {
        if (!s || idx >= s->forced.size()) throw std::invalid_argument("bad forced index");
        if (right_index) *right_index = s->forced[idx].right_index;
        if (forced_value) *forced_value = new slq_quat{s->forced[idx].value};
        if (consistent) *consistent = s->forced[idx].consistent ? 1 : 0;
        return SLQ_OK;
    });
}

long slq_solution_dimension(const slq_solution* s) { return s ? s->dimension : -2; }

/* ---- selftest ---- */

int slq_selftest(uint64_t seed, unsigned rounds, char** out_report) {
    return guarded([&] {
        skl::RandomGen gen(seed);
        unsigned sylvester_checked = 0, lagrange_checked = 0, identity_checked = 0;
        for (unsigned t = 0; t < rounds; ++t) {
            // Sylvester closed form against the oracle.
            Quaternion a = gen.quaternion();
            Quaternion b = gen.coin() ? gen.in_class_of(a) : gen.quaternion();
            Quaternion x0 = gen.quaternion();
            Quaternion g = gen.coin() ? gen.quaternion() : a * x0 - x0 * b;
            auto sol = skl::solve_sylvester(a, b, g);
            auto ora = skl::oracle_sylvester(a, b, g);
            if (sol.solvable() != ora.solvable())
                throw std::logic_error("selftest: sylvester solvability mismatch");
            if (sol.status == skl::SylvesterStatus::Unique &&
                !(Quaternion::from_coords(*ora.particular) == *sol.particular))
                throw std::logic_error("selftest: sylvester solution mismatch");
            ++sylvester_checked;

            // Left Lagrange against the oracle.
            auto nodes = gen.p_independent_left(static_cast<std::size_t>(gen.integer(1, 4)));
            std::vector<Quaternion> values;
            for (std::size_t u = 0; u < nodes.size(); ++u) values.push_back(gen.quaternion());
            auto f = skl::lagrange_left(nodes, values);
            skl::OracleProblem<Quaternion> prob;
            for (std::size_t u = 0; u < nodes.size(); ++u)
                prob.left.push_back({nodes[u], values[u]});
            auto set = skl::oracle_interpolate(prob, static_cast<long>(nodes.size()));
            if (!set.solvable() || set.dimension() != 0 ||
                !(skl::poly_from_coord_vec<Quaternion>(*set.particular) == f))
                throw std::logic_error("selftest: lagrange mismatch");
            ++lagrange_checked;

            // Sylvester bridge identity.
            auto h = gen.quaternion_poly(4);
            Quaternion al = gen.quaternion(), be = gen.quaternion();
            Quaternion mixed = skl::shift_left(al, h).eval_right(be);
            if (!(al * mixed - mixed * be == h.eval_left(al) - h.eval_right(be)))
                throw std::logic_error("selftest: shift identity mismatch");
            ++identity_checked;
        }
        if (out_report) {
            std::ostringstream os;
            os << "selftest passed: seed=" << seed << " rounds=" << rounds
               << " sylvester=" << sylvester_checked << " lagrange=" << lagrange_checked
               << " identities=" << identity_checked;
            *out_report = dup_string(os.str());
        }
        return SLQ_OK;
    });
}

}  // extern "C"
