/*
 * skewlagrange C API: exact Lagrange interpolation for polynomials over
 * the rational quaternions, with left, right, two-sided and generalized
 * (cross-class) solvers, Sylvester equation solvers and minimal
 * polynomials of node sets.
 *
 * Conventions:
 *  - every object is an opaque handle created by the library and released
 *    with the matching *_free function;
 *  - functions return a status from slq_status (SLQ_OK on success); on
 *    failure slq_last_error() describes the problem for the calling
 *    thread;
 *  - strings returned as char* are owned by the caller and released with
 *    slq_string_free;
 *  - quaternion literals: `a+b*i+c*j+d*k` with rational components `p` or
 *    `p/q`, whitespace insignificant, omitted components zero;
 *  - polynomial text: `(c0) + (c1) z + (c2) z^2 + ...` with quaternion
 *    literals in parentheses.
 */

#ifndef SKEWLAGRANGE_H
#define SKEWLAGRANGE_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct slq_quat slq_quat;
typedef struct slq_poly slq_poly;
typedef struct slq_problem slq_problem;
typedef struct slq_solution slq_solution;
typedef struct slq_sylvester slq_sylvester;

enum slq_status {
    SLQ_OK = 0,
    SLQ_ERROR = 1,        /* internal failure */
    SLQ_PARSE_ERROR = 2,  /* malformed input text */
    SLQ_DOMAIN_ERROR = 3, /* precondition violated (zero divisor, dependent nodes, ...) */
    SLQ_INCONSISTENT = 4  /* problem has no solution; a witness is available */
};

enum slq_side { SLQ_LEFT = 0, SLQ_RIGHT = 1 };

enum slq_solve_kind {
    SLQ_SOLVE_LEFT = 0,
    SLQ_SOLVE_RIGHT = 1,
    SLQ_SOLVE_TWO_SIDED = 2,
    SLQ_SOLVE_GENERALIZED = 3
};

enum slq_sylvester_status {
    SLQ_SYLVESTER_UNIQUE = 0,
    SLQ_SYLVESTER_AFFINE = 1,
    SLQ_SYLVESTER_UNSOLVABLE = 2
};

/* Degree reported for the zero polynomial. */
#define SLQ_DEGREE_ZERO_POLY (-1L)

/* Thread-local message describing the most recent failure. */
const char* slq_last_error(void);
void slq_string_free(char* s);

/* ---- quaternions ---- */
int slq_quat_parse(const char* text, slq_quat** out);
slq_quat* slq_quat_clone(const slq_quat* q);
void slq_quat_free(slq_quat* q);
char* slq_quat_format(const slq_quat* q);

int slq_quat_add(const slq_quat* a, const slq_quat* b, slq_quat** out);
int slq_quat_sub(const slq_quat* a, const slq_quat* b, slq_quat** out);
int slq_quat_mul(const slq_quat* a, const slq_quat* b, slq_quat** out);
int slq_quat_inverse(const slq_quat* a, slq_quat** out);
int slq_quat_conjugate(const slq_quat* a, slq_quat** out);

int slq_quat_is_zero(const slq_quat* a);
int slq_quat_is_central(const slq_quat* a);
int slq_quat_equal(const slq_quat* a, const slq_quat* b);
/* 1 iff a and b lie in the same conjugacy class. */
int slq_quat_conjugate_test(const slq_quat* a, const slq_quat* b);
/* Minimal central polynomial of the class of a. */
int slq_quat_class_poly(const slq_quat* a, slq_poly** out);

/* ---- polynomials (coefficients on the right of z^j) ---- */
int slq_poly_parse(const char* text, slq_poly** out);
slq_poly* slq_poly_clone(const slq_poly* f);
void slq_poly_free(slq_poly* f);
char* slq_poly_format(const slq_poly* f);
int slq_poly_add(const slq_poly* f, const slq_poly* g, slq_poly** out);
int slq_poly_sub(const slq_poly* f, const slq_poly* g, slq_poly** out);
int slq_poly_mul(const slq_poly* f, const slq_poly* g, slq_poly** out);
/* c * f and f * c: coefficientwise scaling on the chosen side. */
int slq_poly_scale(const slq_quat* c, const slq_poly* f, int side, slq_poly** out);
long slq_poly_degree(const slq_poly* f);
size_t slq_poly_coeff_count(const slq_poly* f);
int slq_poly_coeff(const slq_poly* f, size_t power, slq_quat** out);
int slq_poly_eval_left(const slq_poly* f, const slq_quat* a, slq_quat** out);
int slq_poly_eval_right(const slq_poly* f, const slq_quat* a, slq_quat** out);

/* ---- node-set operations ---- */

/* Minimal polynomial of a node set on the given side. basis_indices must
 * have room for n entries; *basis_len receives the P-basis size (which is
 * also the degree of *out_poly). */
int slq_minimal_poly(const slq_quat* const* nodes, size_t n, int side, slq_poly** out_poly,
                     size_t* basis_indices, size_t* basis_len);
int slq_p_independent(const slq_quat* const* nodes, size_t n, int side, int* out);
int slq_two_sided_p_independent(const slq_quat* const* left, size_t n,
                                const slq_quat* const* right, size_t k, int* out);

/* Value at `target` forced by left values on a left P-basis of its
 * conjugacy class; side selects the left or right value. */
int slq_extend_in_class(const slq_quat* const* basis_nodes, const slq_quat* const* basis_values,
                        size_t n, const slq_quat* target, int side, slq_quat** out);

/* ---- Sylvester equation a x - x b = g ---- */
int slq_sylvester_solve(const slq_quat* a, const slq_quat* b, const slq_quat* g,
                        slq_sylvester** out);
/* Same solution set computed by exact linear algebra in coordinates. */
int slq_sylvester_oracle(const slq_quat* a, const slq_quat* b, const slq_quat* g,
                         slq_sylvester** out);
void slq_sylvester_free(slq_sylvester* s);
int slq_sylvester_status(const slq_sylvester* s);
int slq_sylvester_particular(const slq_sylvester* s, slq_quat** out);
size_t slq_sylvester_basis_size(const slq_sylvester* s);
int slq_sylvester_basis_get(const slq_sylvester* s, size_t idx, slq_quat** out);

/* ---- interpolation problems ---- */
slq_problem* slq_problem_new(void);
void slq_problem_free(slq_problem* p);
int slq_problem_add_left(slq_problem* p, const slq_quat* node, const slq_quat* value);
int slq_problem_add_right(slq_problem* p, const slq_quat* node, const slq_quat* value);
size_t slq_problem_left_size(const slq_problem* p);
size_t slq_problem_right_size(const slq_problem* p);

/* Solve the problem. With reduce != 0, dependent node sets are first
 * reduced to a P-basis (checking the dropped conditions for consistency);
 * without it, dependent inputs fail with SLQ_DOMAIN_ERROR. Mathematical
 * unsolvability is not an error: the call returns SLQ_OK and the solution
 * handle carries SLQ_INCONSISTENT plus a witness. */
int slq_solve(const slq_problem* p, int kind, int reduce, slq_solution** out);

/* All solutions of degree < degree_bound by exact row reduction. */
int slq_oracle_interpolate(const slq_problem* p, long degree_bound, slq_solution** out);

void slq_solution_free(slq_solution* s);
int slq_solution_status(const slq_solution* s); /* SLQ_OK or SLQ_INCONSISTENT */
int slq_solution_poly(const slq_solution* s, slq_poly** out);
size_t slq_solution_basis_size(const slq_solution* s);
int slq_solution_basis_get(const slq_solution* s, size_t idx, slq_poly** out);
int slq_solution_modulus(const slq_solution* s, int side, slq_poly** out);
/* Witness of inconsistency: condition indices into the original problem.
 * For one-sided problems *right_index is SIZE_MAX. */
int slq_solution_witness(const slq_solution* s, size_t* left_index, size_t* right_index);
/* Conditions dropped as redundant by reduction. */
size_t slq_solution_dropped_size(const slq_solution* s, int side);
int slq_solution_dropped_get(const slq_solution* s, int side, size_t idx, size_t* out_index);
/* Right conditions whose value is forced by left conditions saturating the
 * conjugacy class. */
size_t slq_solution_forced_size(const slq_solution* s);
int slq_solution_forced_get(const slq_solution* s, size_t idx, size_t* right_index,
                            slq_quat** forced_value, int* consistent);
/* Oracle solutions only: dimension of the affine solution set, or -1 when
 * the set is empty. */
long slq_solution_dimension(const slq_solution* s);

/* Randomized cross-check of the closed-form solvers against the oracle.
 * Returns SLQ_OK and a short report on success. */
int slq_selftest(uint64_t seed, unsigned rounds, char** out_report);

#ifdef __cplusplus
}
#endif

#endif /* SKEWLAGRANGE_H */
