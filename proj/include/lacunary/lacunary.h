#ifndef LACUNARY_LACUNARY_H
#define LACUNARY_LACUNARY_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define LAC_API __attribute__((visibility("default")))
#else
#define LAC_API
#endif

typedef enum lac_status {
  LAC_OK = 0,
  LAC_ERR_INVALID_ARGUMENT = 1,
  LAC_ERR_VARIANT_MISMATCH = 2,
  LAC_ERR_RESOURCE_LIMIT = 3,
  LAC_ERR_NUMERICAL = 4,
  LAC_ERR_INTERNAL = 5,
  LAC_ERR_NULL_POINTER = 6
} lac_status;

typedef enum lac_coeff_kind {
  LAC_COEFF_BIGINT = 0,
  LAC_COEFF_RATIONAL = 1,
  LAC_COEFF_COMPLEX = 2
} lac_coeff_kind;

typedef enum lac_which { LAC_WHICH_P = 0, LAC_WHICH_Q = 1 } lac_which;

typedef struct lac_poly lac_poly;
typedef struct lac_rs_pair lac_rs_pair;
typedef struct lac_matrix lac_matrix;
typedef struct lac_halving_op lac_halving_op;
typedef struct lac_group lac_group;
typedef struct lac_step_function lac_step_function;
typedef struct lac_distribution lac_distribution;
typedef struct lac_report lac_report;

/* Message of the most recent failure on the calling thread ("" if none). */
LAC_API const char* lac_last_error(void);
LAC_API const char* lac_status_name(lac_status status);
LAC_API const char* lac_version(void);
LAC_API int lac_schema_version(void);

/* Reports: a JSON document and, for tabular results, a CSV rendering.
   lac_report_csv returns NULL when there is no tabular form. */
LAC_API const char* lac_report_json(const lac_report* report);
LAC_API const char* lac_report_csv(const lac_report* report);
LAC_API void lac_report_free(lac_report* report);

/* Exact Laurent polynomials. Coefficient i belongs to z^(low + i).
   Rational coefficients are decimal strings "p/q" or "p". */
LAC_API lac_status lac_poly_from_ints(int64_t low, const int64_t* coeffs, size_t count,
                                      lac_poly** out);
LAC_API lac_status lac_poly_from_strings(int64_t low, const char* const* coeffs,
                                         size_t count, lac_coeff_kind kind,
                                         lac_poly** out);
/* re_im holds 2 * count doubles. */
LAC_API lac_status lac_poly_from_complex(int64_t low, const double* re_im, size_t count,
                                         lac_poly** out);
LAC_API lac_status lac_poly_kind(const lac_poly* p, lac_coeff_kind* out);
LAC_API lac_status lac_poly_low(const lac_poly* p, int64_t* out);
LAC_API lac_status lac_poly_size(const lac_poly* p, size_t* out);
/* Both operands must have the same coefficient kind. */
LAC_API lac_status lac_poly_multiply(const lac_poly* a, const lac_poly* b, lac_poly** out);
LAC_API lac_status lac_poly_reverse(const lac_poly* p, lac_poly** out);
LAC_API lac_status lac_poly_substitute_power(const lac_poly* p, int64_t s, lac_poly** out);
LAC_API lac_status lac_poly_halve(const lac_poly* p, lac_poly** out);
/* {"kind", "low", "coefficients"}; coefficients are strings, or [re, im]. */
LAC_API lac_status lac_poly_report(const lac_poly* p, lac_report** out);
LAC_API void lac_poly_free(lac_poly* p);

/* Rudin-Shapiro pairs and moments. */
LAC_API lac_status lac_rs_generate(unsigned k, lac_rs_pair** out);
LAC_API lac_status lac_rs_pair_length(const lac_rs_pair* pair, size_t* out);
/* Copies min(capacity, length) coefficients. */
LAC_API lac_status lac_rs_pair_coeffs(const lac_rs_pair* pair, lac_which which,
                                      int8_t* buffer, size_t capacity);
LAC_API lac_status lac_rs_pair_report(const lac_rs_pair* pair, lac_report** out);
LAC_API void lac_rs_pair_free(lac_rs_pair* pair);

LAC_API lac_status lac_rs_parseval(unsigned k, lac_report** out);
LAC_API lac_status lac_rs_alt_recursion(unsigned k, lac_report** out);
/* budget 0 selects the default term budget. */
LAC_API lac_status lac_rs_even_moment(unsigned k, unsigned n, size_t budget,
                                      lac_report** out);
LAC_API lac_status lac_rs_mixed_moment(unsigned k, unsigned n, unsigned m, size_t budget,
                                       lac_report** out);

/* Evaluation on roots of unity and distribution statistics. */
LAC_API lac_status lac_circle_eval(unsigned k, size_t n, lac_which which, lac_report** out);
LAC_API lac_status lac_circle_saffari(unsigned k, size_t n, size_t bins, lac_report** out);
LAC_API lac_status lac_circle_montgomery(unsigned k, size_t n, size_t grid_size,
                                         lac_report** out);
LAC_API lac_status lac_circle_min_modulus(unsigned k, size_t n, lac_report** out);
LAC_API lac_status lac_circle_link(unsigned k, size_t samples, uint64_t seed,
                                   lac_report** out);

/* Dense complex matrices. */
LAC_API lac_status lac_matrix_rows(const lac_matrix* m, size_t* out);
LAC_API lac_status lac_matrix_cols(const lac_matrix* m, size_t* out);
LAC_API lac_status lac_matrix_get(const lac_matrix* m, size_t row, size_t col, double* re,
                                  double* im);
LAC_API lac_status lac_matrix_report(const lac_matrix* m, lac_report** out);
LAC_API void lac_matrix_free(lac_matrix* m);

/* Representations of SU(2); two_ell is twice the label. */
LAC_API lac_status lac_rep_tau(int two_ell, lac_matrix** out);
/* g_re_im: row-major 2x2 complex matrix as 8 doubles; must lie in SU(2). */
LAC_API lac_status lac_rep_of_su2(int two_ell, const double* g_re_im, lac_matrix** out);
LAC_API lac_status lac_rep_verify(int two_ell, lac_report** out);

/* Halving operators. has_lambda = 0 builds the untwisted operator. */
LAC_API lac_status lac_halving_build(int two_ell, int has_lambda, int lambda,
                                     lac_halving_op** out);
LAC_API lac_status lac_halving_dim(const lac_halving_op* op, size_t* out);
LAC_API lac_status lac_halving_matrix(const lac_halving_op* op, lac_matrix** out);
LAC_API lac_status lac_halving_report(const lac_halving_op* op, lac_report** out);
LAC_API lac_status lac_halving_spectrum(const lac_halving_op* op, int with_eigenvalues,
                                        lac_report** out);
LAC_API void lac_halving_free(lac_halving_op* op);

LAC_API lac_status lac_expected_rep(int two_ell, unsigned k, lac_matrix** out);
LAC_API lac_status lac_independence_moment(int two_ell, int lambda, unsigned k,
                                           lac_matrix** out);
LAC_API lac_status lac_cross_check(int two_ell, int lambda, unsigned k, size_t budget,
                                   lac_report** out);

/* Finite groups, dyadic step functions and exact product laws. */
LAC_API lac_status lac_group_preset(const char* name, lac_group** out);
/* {"order", "cayley", "identity", "labels"} */
LAC_API lac_status lac_group_from_json(const char* text, lac_group** out);
LAC_API lac_status lac_group_order(const lac_group* g, int* out);
LAC_API void lac_group_free(lac_group* g);

LAC_API lac_status lac_step_preset(const char* name, lac_step_function** out);
/* {"resolution", "table"} */
LAC_API lac_status lac_step_from_json(const char* text, lac_step_function** out);
LAC_API void lac_step_free(lac_step_function* f);

LAC_API lac_status lac_walk_exact(const lac_group* g, const lac_step_function* f,
                                  unsigned k, size_t state_budget, lac_distribution** out);
LAC_API lac_status lac_walk_brute(const lac_group* g, const lac_step_function* f,
                                  unsigned k, lac_distribution** out);
/* Mass of element `index` as a "p/q" string, valid until the handle is freed. */
LAC_API lac_status lac_distribution_mass(const lac_distribution* d, int index,
                                         const char** out);
LAC_API lac_status lac_distribution_equal(const lac_distribution* a,
                                          const lac_distribution* b, int* out);
/* {"distribution", "total", "tv_distance"} plus CSV label,mass. */
LAC_API lac_status lac_distribution_report(const lac_distribution* d, lac_report** out);
LAC_API void lac_distribution_free(lac_distribution* d);

/* kind is "su2_g" or "u2_G"; threads 0 picks a default. */
LAC_API lac_status lac_walk_monte_carlo(const char* kind, unsigned k, size_t samples,
                                        uint64_t seed, unsigned threads, lac_report** out);

/* Runs the acceptance criteria. level is "fast" or "full". The report lists
   each criterion; *all_passed is set to 1 only when every one passes. */
LAC_API lac_status lac_acceptance_run(const char* level, double tau_perturbation,
                                      int include_timings, int* all_passed,
                                      lac_report** out);

#ifdef __cplusplus
}
#endif

#endif
