// slq: command-line front end for the skewlagrange library.
//
// Problems are JSON files:
//   { "left":  [ {"node": "i", "value": "1"} ],
//     "right": [ {"node": "1+j", "value": "0"} ],
//     "options": { "reduce": true, "parameters": ["1/2", "-3"] } }
// Node and value strings use the quaternion literal grammar. The optional
// parameters pick a member of the homogeneous solution family.
//
// Exit codes: 0 solved / check passed, 2 mathematically inconsistent,
// 1 usage or parse error.

#include "skewlagrange.h"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace {

using nlohmann::ordered_json;

constexpr int kExitSolved = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInconsistent = 2;

struct QuatDeleter {
    void operator()(slq_quat* q) const { slq_quat_free(q); }
};
struct PolyDeleter {
    void operator()(slq_poly* f) const { slq_poly_free(f); }
};
struct ProblemDeleter {
    void operator()(slq_problem* p) const { slq_problem_free(p); }
};
struct SolutionDeleter {
    void operator()(slq_solution* s) const { slq_solution_free(s); }
};
struct SylvesterDeleter {
    void operator()(slq_sylvester* s) const { slq_sylvester_free(s); }
};
using QuatPtr = std::unique_ptr<slq_quat, QuatDeleter>;
using PolyPtr = std::unique_ptr<slq_poly, PolyDeleter>;
using ProblemPtr = std::unique_ptr<slq_problem, ProblemDeleter>;
using SolutionPtr = std::unique_ptr<slq_solution, SolutionDeleter>;
using SylvesterPtr = std::unique_ptr<slq_sylvester, SylvesterDeleter>;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InconsistentExit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

QuatPtr parse_quat(const std::string& text, const std::string& what) {
    slq_quat* q = nullptr;
    if (slq_quat_parse(text.c_str(), &q) != SLQ_OK)
        throw UsageError(what + " '" + text + "': " + slq_last_error());
    return QuatPtr(q);
}

PolyPtr parse_poly(const std::string& text, const std::string& what) {
    slq_poly* f = nullptr;
    if (slq_poly_parse(text.c_str(), &f) != SLQ_OK)
        throw UsageError(what + " '" + text + "': " + slq_last_error());
    return PolyPtr(f);
}

std::string take_string(char* s) {
    std::string out = s ? s : "";
    slq_string_free(s);
    return out;
}

std::string quat_str(const slq_quat* q) { return take_string(slq_quat_format(q)); }
std::string poly_str(const slq_poly* f) { return take_string(slq_poly_format(f)); }

ordered_json poly_json(const slq_poly* f) {
    ordered_json coeffs = ordered_json::array();
    for (size_t j = 0; j < slq_poly_coeff_count(f); ++j) {
        slq_quat* c = nullptr;
        slq_poly_coeff(f, j, &c);
        coeffs.push_back(quat_str(c));
        slq_quat_free(c);
    }
    return ordered_json{{"text", poly_str(f)}, {"coefficients", coeffs}};
}

struct ProblemFile {
    ProblemPtr problem;
    std::vector<std::string> left_nodes, left_values, right_nodes, right_values;
    bool reduce_option = false;
    std::vector<std::string> parameters;
};

ProblemFile load_problem(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open problem file '" + path + "'");
    ordered_json doc;
    try {
        doc = ordered_json::parse(in);
    } catch (const std::exception& e) {
        throw UsageError("problem file '" + path + "': " + e.what());
    }

    ProblemFile out;
    out.problem.reset(slq_problem_new());
    if (!out.problem) throw UsageError("out of memory");
    auto load_side = [&](const char* key, bool left) {
        if (!doc.contains(key)) return;
        if (!doc[key].is_array()) throw UsageError(std::string("'") + key + "' must be an array");
        for (const auto& entry : doc[key]) {
            if (!entry.contains("node") || !entry.contains("value"))
                throw UsageError(std::string("each '") + key +
                                 "' entry needs \"node\" and \"value\"");
            auto node = parse_quat(entry["node"].get<std::string>(), "node");
            auto value = parse_quat(entry["value"].get<std::string>(), "value");
            int rc = left ? slq_problem_add_left(out.problem.get(), node.get(), value.get())
                          : slq_problem_add_right(out.problem.get(), node.get(), value.get());
            if (rc != SLQ_OK) throw UsageError(slq_last_error());
            (left ? out.left_nodes : out.right_nodes).push_back(entry["node"].get<std::string>());
            (left ? out.left_values : out.right_values)
                .push_back(entry["value"].get<std::string>());
        }
    };
    load_side("left", true);
    load_side("right", false);
    if (doc.contains("options")) {
        const auto& opts = doc["options"];
        if (opts.contains("reduce")) out.reduce_option = opts["reduce"].get<bool>();
        if (opts.contains("parameters"))
            for (const auto& p : opts["parameters"]) out.parameters.push_back(p.get<std::string>());
    }
    return out;
}

void emit(const ordered_json& report, const std::string& format) {
    if (format == "json") {
        std::cout << report.dump(2) << "\n";
        return;
    }
    // text: flat key/value lines
    for (const auto& [key, value] : report.items()) {
        if (value.is_string())
            std::cout << key << ": " << value.get<std::string>() << "\n";
        else
            std::cout << key << ": " << value.dump() << "\n";
    }
}

// Evaluates the reported polynomial against every condition; inconsistent
// output is a bug, not a user error.
void self_verify(const slq_poly* f, const slq_problem* p, const ProblemFile& file) {
    for (size_t t = 0; t < file.left_nodes.size(); ++t) {
        auto node = parse_quat(file.left_nodes[t], "node");
        auto want = parse_quat(file.left_values[t], "value");
        slq_quat* got = nullptr;
        slq_poly_eval_left(f, node.get(), &got);
        QuatPtr got_p(got);
        if (!slq_quat_equal(got, want.get()))
            throw std::runtime_error("internal error: self-verification failed at left node " +
                                     file.left_nodes[t]);
    }
    for (size_t t = 0; t < file.right_nodes.size(); ++t) {
        auto node = parse_quat(file.right_nodes[t], "node");
        auto want = parse_quat(file.right_values[t], "value");
        slq_quat* got = nullptr;
        slq_poly_eval_right(f, node.get(), &got);
        QuatPtr got_p(got);
        if (!slq_quat_equal(got, want.get()))
            throw std::runtime_error("internal error: self-verification failed at right node " +
                                     file.right_nodes[t]);
    }
    (void)p;
}

ordered_json witness_json(const slq_solution* sol) {
    size_t li = 0, ri = 0;
    ordered_json out = ordered_json::array();
    if (slq_solution_witness(sol, &li, &ri) == SLQ_OK) {
        ordered_json w;
        if (li != SIZE_MAX) w["left_index"] = li;
        if (ri != SIZE_MAX) w["right_index"] = ri;
        out.push_back(w);
    }
    return out;
}

int cmd_interp(const std::string& path, const std::string& side, bool reduce_flag,
               std::optional<long> degree_bound, const std::string& format) {
    ProblemFile file = load_problem(path);
    const bool reduce = reduce_flag || file.reduce_option;

    if (degree_bound) {
        // delegate to the exact oracle at the requested bound
        slq_solution* raw = nullptr;
        if (slq_oracle_interpolate(file.problem.get(), *degree_bound, &raw) != SLQ_OK)
            throw UsageError(slq_last_error());
        SolutionPtr sol(raw);
        ordered_json report;
        if (slq_solution_status(sol.get()) == SLQ_INCONSISTENT) {
            report["status"] = "inconsistent";
            report["dimension"] = -1;
            emit(report, format);
            return kExitInconsistent;
        }
        slq_poly* f = nullptr;
        slq_solution_poly(sol.get(), &f);
        PolyPtr fp(f);
        report["status"] = "solved";
        report["polynomial"] = poly_str(f);
        report["degree"] = slq_poly_degree(f);
        report["dimension"] = slq_solution_dimension(sol.get());
        ordered_json basis = ordered_json::array();
        for (size_t t = 0; t < slq_solution_basis_size(sol.get()); ++t) {
            slq_poly* h = nullptr;
            slq_solution_basis_get(sol.get(), t, &h);
            basis.push_back(poly_str(h));
            slq_poly_free(h);
        }
        report["homogeneous_basis"] = basis;
        self_verify(f, file.problem.get(), file);
        emit(report, format);
        return kExitSolved;
    }

    int kind = SLQ_SOLVE_TWO_SIDED;
    if (side == "left") kind = SLQ_SOLVE_LEFT;
    else if (side == "right") kind = SLQ_SOLVE_RIGHT;
    else if (side == "two") kind = SLQ_SOLVE_TWO_SIDED;
    else if (side == "generalized") kind = SLQ_SOLVE_GENERALIZED;
    else throw UsageError("unknown --side '" + side + "'");

    slq_solution* raw = nullptr;
    int rc = slq_solve(file.problem.get(), kind, reduce ? 1 : 0, &raw);
    if (rc == SLQ_DOMAIN_ERROR)
        throw UsageError(std::string(slq_last_error()) + " (run with --reduce)");
    if (rc != SLQ_OK) throw UsageError(slq_last_error());
    SolutionPtr sol(raw);

    ordered_json report;
    ordered_json forced = ordered_json::array();
    for (size_t t = 0; t < slq_solution_forced_size(sol.get()); ++t) {
        size_t ri = 0;
        slq_quat* value = nullptr;
        int consistent = 0;
        slq_solution_forced_get(sol.get(), t, &ri, &value, &consistent);
        QuatPtr vp(value);
        forced.push_back(ordered_json{{"right_index", ri},
                                      {"forced_value", quat_str(value)},
                                      {"consistent", consistent != 0}});
    }

    if (slq_solution_status(sol.get()) == SLQ_INCONSISTENT) {
        report["status"] = "inconsistent";
        report["witnesses"] = witness_json(sol.get());
        report["forced_conditions"] = forced;
        emit(report, format);
        return kExitInconsistent;
    }

    slq_poly* f = nullptr;
    slq_solution_poly(sol.get(), &f);
    PolyPtr fp(f);

    // apply family parameters, if any: reported = base + sum_t lambda_t h_t
    PolyPtr reported;
    if (!file.parameters.empty()) {
        size_t nbasis = slq_solution_basis_size(sol.get());
        if (file.parameters.size() > nbasis)
            throw UsageError("more parameters than homogeneous basis elements");
        PolyPtr accp(slq_poly_clone(f));
        for (size_t t = 0; t < file.parameters.size(); ++t) {
            auto lambda = parse_quat(file.parameters[t], "parameter");
            if (!slq_quat_is_central(lambda.get()))
                throw UsageError("family parameters must be central (rational)");
            slq_poly* h = nullptr;
            slq_solution_basis_get(sol.get(), t, &h);
            PolyPtr hp(h);
            slq_poly* scaled = nullptr;
            if (slq_poly_scale(lambda.get(), h, SLQ_LEFT, &scaled) != SLQ_OK)
                throw UsageError(slq_last_error());
            PolyPtr sp(scaled);
            slq_poly* sum = nullptr;
            if (slq_poly_add(accp.get(), scaled, &sum) != SLQ_OK)
                throw UsageError(slq_last_error());
            accp.reset(sum);
        }
        reported = std::move(accp);
    }
    const slq_poly* final_poly = reported ? reported.get() : f;

    report["status"] = "solved";
    report["polynomial"] = poly_str(final_poly);
    report["coefficients"] = poly_json(final_poly)["coefficients"];
    report["degree"] = slq_poly_degree(final_poly);
    ordered_json basis = ordered_json::array();
    for (size_t t = 0; t < slq_solution_basis_size(sol.get()); ++t) {
        slq_poly* h = nullptr;
        slq_solution_basis_get(sol.get(), t, &h);
        basis.push_back(poly_str(h));
        slq_poly_free(h);
    }
    report["homogeneous_basis"] = basis;
    for (int side_id : {SLQ_LEFT, SLQ_RIGHT}) {
        slq_poly* m = nullptr;
        if (slq_solution_modulus(sol.get(), side_id, &m) == SLQ_OK) {
            report[side_id == SLQ_LEFT ? "left_modulus" : "right_modulus"] = poly_str(m);
            slq_poly_free(m);
        }
    }
    ordered_json dropped = ordered_json::array();
    for (int side_id : {SLQ_LEFT, SLQ_RIGHT})
        for (size_t t = 0; t < slq_solution_dropped_size(sol.get(), side_id); ++t) {
            size_t idx = 0;
            slq_solution_dropped_get(sol.get(), side_id, t, &idx);
            dropped.push_back(ordered_json{{"side", side_id == SLQ_LEFT ? "left" : "right"},
                                           {"index", idx}});
        }
    report["dropped_conditions"] = dropped;
    report["forced_conditions"] = forced;
    report["witnesses"] = ordered_json::array();

    self_verify(final_poly, file.problem.get(), file);
    emit(report, format);
    return kExitSolved;
}

int cmd_minpoly(const std::vector<std::string>& node_texts, const std::string& side,
                const std::string& format) {
    std::vector<QuatPtr> owners;
    std::vector<const slq_quat*> nodes;
    for (const auto& t : node_texts) {
        owners.push_back(parse_quat(t, "node"));
        nodes.push_back(owners.back().get());
    }
    slq_poly* poly = nullptr;
    std::vector<size_t> basis(nodes.size());
    size_t basis_len = 0;
    if (slq_minimal_poly(nodes.data(), nodes.size(), side == "right" ? SLQ_RIGHT : SLQ_LEFT,
                         &poly, basis.data(), &basis_len) != SLQ_OK)
        throw UsageError(slq_last_error());
    PolyPtr fp(poly);
    ordered_json report;
    report["polynomial"] = poly_str(poly);
    report["degree"] = slq_poly_degree(poly);
    ordered_json bj = ordered_json::array();
    for (size_t t = 0; t < basis_len; ++t) bj.push_back(basis[t]);
    report["basis_indices"] = bj;
    report["p_independent"] = basis_len == nodes.size();
    emit(report, format);
    return kExitSolved;
}

int cmd_independent(const std::vector<std::string>& left_texts,
                    const std::vector<std::string>& right_texts, const std::string& side,
                    const std::string& format) {
    std::vector<QuatPtr> owners;
    std::vector<const slq_quat*> left, right;
    for (const auto& t : left_texts) {
        owners.push_back(parse_quat(t, "node"));
        left.push_back(owners.back().get());
    }
    for (const auto& t : right_texts) {
        owners.push_back(parse_quat(t, "node"));
        right.push_back(owners.back().get());
    }
    int result = 0;
    if (side == "two") {
        if (slq_two_sided_p_independent(left.data(), left.size(), right.data(), right.size(),
                                        &result) != SLQ_OK)
            throw UsageError(slq_last_error());
    } else {
        const auto& nodes = side == "right" ? right : left;
        if (nodes.empty()) throw UsageError("no nodes given for side " + side);
        if (slq_p_independent(nodes.data(), nodes.size(),
                              side == "right" ? SLQ_RIGHT : SLQ_LEFT, &result) != SLQ_OK)
            throw UsageError(slq_last_error());
    }
    ordered_json report;
    report["side"] = side;
    report["independent"] = result != 0;
    emit(report, format);
    return result != 0 ? kExitSolved : kExitInconsistent;
}

int cmd_sylvester(const std::string& at, const std::string& bt, const std::string& gt,
                  bool use_oracle, const std::string& format) {
    auto a = parse_quat(at, "a"), b = parse_quat(bt, "b"), g = parse_quat(gt, "g");
    slq_sylvester* raw = nullptr;
    int rc = use_oracle ? slq_sylvester_oracle(a.get(), b.get(), g.get(), &raw)
                        : slq_sylvester_solve(a.get(), b.get(), g.get(), &raw);
    if (rc != SLQ_OK) throw UsageError(slq_last_error());
    SylvesterPtr sol(raw);

    ordered_json report;
    int status = slq_sylvester_status(sol.get());
    report["status"] = status == SLQ_SYLVESTER_UNIQUE
                           ? "unique"
                           : status == SLQ_SYLVESTER_AFFINE ? "affine" : "unsolvable";
    if (status != SLQ_SYLVESTER_UNSOLVABLE) {
        slq_quat* x = nullptr;
        slq_sylvester_particular(sol.get(), &x);
        QuatPtr xp(x);
        report["particular"] = quat_str(x);
    }
    ordered_json basis = ordered_json::array();
    for (size_t t = 0; t < slq_sylvester_basis_size(sol.get()); ++t) {
        slq_quat* v = nullptr;
        slq_sylvester_basis_get(sol.get(), t, &v);
        basis.push_back(quat_str(v));
        slq_quat_free(v);
    }
    report["basis"] = basis;
    emit(report, format);
    return status == SLQ_SYLVESTER_UNSOLVABLE ? kExitInconsistent : kExitSolved;
}

int cmd_extend(const std::string& target_text, const std::vector<std::string>& node_texts,
               const std::vector<std::string>& value_texts, const std::string& side,
               const std::string& format) {
    if (node_texts.size() != value_texts.size() || node_texts.empty())
        throw UsageError("--node and --value must be given equally often (at least once)");
    std::vector<QuatPtr> owners;
    std::vector<const slq_quat*> nodes, values;
    for (const auto& t : node_texts) {
        owners.push_back(parse_quat(t, "node"));
        nodes.push_back(owners.back().get());
    }
    for (const auto& t : value_texts) {
        owners.push_back(parse_quat(t, "value"));
        values.push_back(owners.back().get());
    }
    auto target = parse_quat(target_text, "target");
    slq_quat* out = nullptr;
    if (slq_extend_in_class(nodes.data(), values.data(), nodes.size(), target.get(),
                            side == "right" ? SLQ_RIGHT : SLQ_LEFT, &out) != SLQ_OK)
        throw UsageError(slq_last_error());
    QuatPtr op(out);
    ordered_json report;
    report["target"] = target_text;
    report["side"] = side;
    report["value"] = quat_str(out);
    emit(report, format);
    return kExitSolved;
}

int cmd_verify(const std::string& poly_text, const std::string& path, const std::string& format) {
    ProblemFile file = load_problem(path);
    auto f = parse_poly(poly_text, "polynomial");
    ordered_json residuals = ordered_json::array();
    bool all_zero = true;
    auto record = [&](const std::string& side, const std::string& node_text,
                      const std::string& value_text) {
        auto node = parse_quat(node_text, "node");
        auto want = parse_quat(value_text, "value");
        slq_quat* got = nullptr;
        if (side == "left")
            slq_poly_eval_left(f.get(), node.get(), &got);
        else
            slq_poly_eval_right(f.get(), node.get(), &got);
        QuatPtr gp(got);
        slq_quat* res = nullptr;
        slq_quat_sub(got, want.get(), &res);
        QuatPtr rp(res);
        bool zero = slq_quat_is_zero(res) != 0;
        all_zero = all_zero && zero;
        residuals.push_back(ordered_json{{"side", side},
                                         {"node", node_text},
                                         {"expected", value_text},
                                         {"actual", quat_str(got)},
                                         {"residual", quat_str(res)},
                                         {"ok", zero}});
    };
    for (size_t t = 0; t < file.left_nodes.size(); ++t)
        record("left", file.left_nodes[t], file.left_values[t]);
    for (size_t t = 0; t < file.right_nodes.size(); ++t)
        record("right", file.right_nodes[t], file.right_values[t]);

    ordered_json report;
    report["status"] = all_zero ? "pass" : "fail";
    report["residuals"] = residuals;
    emit(report, format);
    return all_zero ? kExitSolved : kExitInconsistent;
}

int cmd_oracle(const std::string& path, long degree_bound, const std::string& format) {
    return cmd_interp(path, "two", false, degree_bound, format);
}

int cmd_selftest(std::uint64_t seed, unsigned rounds, const std::string& format) {
    char* text = nullptr;
    int rc = slq_selftest(seed, rounds, &text);
    std::string body = take_string(text);
    ordered_json report;
    report["status"] = rc == SLQ_OK ? "pass" : "fail";
    report["report"] = rc == SLQ_OK ? body : std::string(slq_last_error());
    emit(report, format);
    return rc == SLQ_OK ? kExitSolved : kExitInconsistent;
}

std::uint64_t env_seed() {
    if (const char* env = std::getenv("SKEWLAGRANGE_SEED")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0') return v;
    }
    return 0x5eed5eedULL;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Lagrange interpolation over the rational quaternions"};
    app.require_subcommand(1);
    std::string format = "json";
    app.add_option("--format", format, "output format: json or text")
        ->check(CLI::IsMember({"json", "text"}));
    std::uint64_t seed = env_seed();
    app.add_option("--seed", seed, "seed for randomized commands");

    // interp
    auto* interp = app.add_subcommand("interp", "solve an interpolation problem file");
    std::string interp_file, interp_side = "two";
    bool interp_reduce = false;
    std::optional<long> interp_bound;
    interp->add_option("file", interp_file, "problem JSON file")->required();
    interp->add_option("--side", interp_side, "left | right | two | generalized")
        ->check(CLI::IsMember({"left", "right", "two", "generalized"}));
    interp->add_flag("--reduce", interp_reduce, "reduce dependent node sets first");
    interp->add_option("--degree-bound", interp_bound,
                       "solve by exact oracle within this degree bound");

    // minpoly
    auto* minpoly = app.add_subcommand("minpoly", "minimal polynomial of a node set");
    std::vector<std::string> minpoly_nodes;
    std::string minpoly_side = "left";
    minpoly->add_option("nodes", minpoly_nodes, "quaternion nodes")->required();
    minpoly->add_option("--side", minpoly_side, "left | right")
        ->check(CLI::IsMember({"left", "right"}));

    // independent
    auto* indep = app.add_subcommand("independent", "P-independence test");
    std::vector<std::string> indep_nodes, indep_left, indep_right;
    std::string indep_side = "left";
    indep->add_option("nodes", indep_nodes, "nodes for a one-sided test");
    indep->add_option("--left", indep_left, "left nodes (two-sided test)");
    indep->add_option("--right", indep_right, "right nodes (two-sided test)");
    indep->add_option("--side", indep_side, "left | right | two")
        ->check(CLI::IsMember({"left", "right", "two"}));

    // sylvester
    auto* sylv = app.add_subcommand("sylvester", "solve a x - x b = g");
    std::string sylv_a, sylv_b, sylv_g;
    bool sylv_oracle = false;
    sylv->add_option("a", sylv_a)->required();
    sylv->add_option("b", sylv_b)->required();
    sylv->add_option("g", sylv_g)->required();
    sylv->add_flag("--oracle", sylv_oracle, "use the exact linear-algebra route");

    // extend
    auto* extend = app.add_subcommand("extend", "extend class values to a target node");
    std::string extend_target, extend_side = "left";
    std::vector<std::string> extend_nodes, extend_values;
    extend->add_option("target", extend_target, "target node")->required();
    extend->add_option("--node", extend_nodes, "P-basis node (repeatable)")->required();
    extend->add_option("--value", extend_values, "left value at the matching node")->required();
    extend->add_option("--side", extend_side, "left | right")
        ->check(CLI::IsMember({"left", "right"}));

    // verify
    auto* verify = app.add_subcommand("verify", "evaluate a polynomial against a problem file");
    std::string verify_poly, verify_file;
    verify->add_option("polynomial", verify_poly, "polynomial text")->required();
    verify->add_option("file", verify_file, "problem JSON file")->required();

    // oracle
    auto* oracle = app.add_subcommand("oracle", "exact oracle: all solutions below a bound, "
                                                "or --selftest");
    std::string oracle_file;
    long oracle_bound = 0;
    bool oracle_selftest = false;
    unsigned oracle_rounds = 25;
    oracle->add_option("file", oracle_file, "problem JSON file");
    oracle->add_option("--degree-bound", oracle_bound, "degree bound");
    oracle->add_flag("--selftest", oracle_selftest, "randomized closed-form vs oracle check");
    oracle->add_option("--rounds", oracle_rounds, "selftest rounds");

    // allow --format/--seed after the subcommand name
    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
        if (interp->parsed())
            return cmd_interp(interp_file, interp_side, interp_reduce, interp_bound, format);
        if (minpoly->parsed()) return cmd_minpoly(minpoly_nodes, minpoly_side, format);
        if (indep->parsed()) {
            if (indep_side != "two" && !indep_nodes.empty() && indep_left.empty() &&
                indep_right.empty()) {
                (indep_side == "right" ? indep_right : indep_left) = indep_nodes;
            } else if (!indep_nodes.empty()) {
                (indep_side == "right" ? indep_right : indep_left) = indep_nodes;
            }
            return cmd_independent(indep_left, indep_right, indep_side, format);
        }
        if (sylv->parsed()) return cmd_sylvester(sylv_a, sylv_b, sylv_g, sylv_oracle, format);
        if (extend->parsed())
            return cmd_extend(extend_target, extend_nodes, extend_values, extend_side, format);
        if (verify->parsed()) return cmd_verify(verify_poly, verify_file, format);
        if (oracle->parsed()) {
            if (oracle_selftest) return cmd_selftest(seed, oracle_rounds, format);
            if (oracle_file.empty()) throw UsageError("oracle: need a problem file or --selftest");
            return cmd_oracle(oracle_file, oracle_bound, format);
        }
        throw UsageError("no subcommand");
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitSolved : kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
