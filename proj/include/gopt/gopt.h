/* gopt - global optimization toolkit.
 *
 * C interface to the basin-aware grid-shift gradient descent optimizer, the
 * built-in benchmark objectives, the convergence verification checks, and
 * the global-minimality witness search.
 *
 * All objects handed out by this API are opaque; free them with the matching
 * *_free function. Functions report gopt_status; on any non-OK status a
 * human-readable description is available from gopt_last_error() on the same
 * thread.
 */

#ifndef GOPT_H
#define GOPT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define GOPT_API __declspec(dllexport)
#else
#define GOPT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gopt_status {
  GOPT_OK = 0,
  GOPT_ERR_INVALID_ARG = 1,   /* bad name, bad parameter, null pointer */
  GOPT_ERR_DIMENSION = 2,     /* point length does not match the objective */
  GOPT_ERR_BUDGET = 3,        /* lattice scan larger than the point budget */
  GOPT_ERR_NON_FINITE = 4,    /* NaN or infinity encountered */
  GOPT_ERR_DIVERGED = 5,      /* run produced a non-finite iterate */
  GOPT_ERR_IO = 6,            /* file could not be read or written */
  GOPT_ERR_PARSE = 7          /* malformed trace file */
} gopt_status;

typedef struct gopt_objective gopt_objective; /* opaque */
typedef struct gopt_trace gopt_trace;         /* opaque */
typedef struct gopt_rate_report gopt_rate_report; /* opaque */

/* Description of the most recent error on this thread. Never NULL. */
GOPT_API const char* gopt_last_error(void);

GOPT_API const char* gopt_version(void);

/* ---- objectives ------------------------------------------------------- */

/* Benchmarks: rastrigin, ackley, sphere, rosenbrock, beale, booth.
 * ackley/beale/booth require dim == 2; rosenbrock dim >= 2; others dim >= 1. */
GOPT_API gopt_status gopt_objective_create(const char* name, int dim,
                                           gopt_objective** out);
GOPT_API void gopt_objective_free(gopt_objective* obj);

GOPT_API int gopt_objective_dim(const gopt_objective* obj);
GOPT_API const char* gopt_objective_name(const gopt_objective* obj);

GOPT_API gopt_status gopt_objective_value(const gopt_objective* obj,
                                          const double* x, size_t dim,
                                          double* out);
GOPT_API gopt_status gopt_objective_gradient(const gopt_objective* obj,
                                             const double* x, size_t dim,
                                             double* out);

/* Known global optimum; fails with GOPT_ERR_INVALID_ARG if none is on file. */
GOPT_API gopt_status gopt_objective_optimum(const gopt_objective* obj,
                                            double* x_out, double* f_out);
GOPT_API gopt_status gopt_objective_default_domain(const gopt_objective* obj,
                                                   double* lo, double* hi);
GOPT_API void gopt_objective_eval_counts(const gopt_objective* obj,
                                         uint64_t* value_evals,
                                         uint64_t* gradient_evals);

/* Step size / basin lower bound used by the reference experiments. */
GOPT_API gopt_status gopt_paper_params(const char* name, double* step_size,
                                       double* basin_bound);

/* ---- runs -------------------------------------------------------------- */

#define GOPT_SCAN_DIAGONAL 0
#define GOPT_SCAN_LATTICE 1

typedef struct gopt_run_config {
  double step_size;            /* t > 0 */
  double basin_bound;          /* m > 0, candidate spacing */
  uint64_t max_iterations;     /* gradient-step budget */
  int scan_strategy;           /* GOPT_SCAN_DIAGONAL or GOPT_SCAN_LATTICE */
  uint64_t lattice_point_budget;
  int clamp_to_domain;         /* clamp scan points into the box before eval */
  double stop_grad_tol;        /* stop once ||grad|| <= this */
} gopt_run_config;

GOPT_API void gopt_run_config_init(gopt_run_config* cfg);

/* On GOPT_ERR_DIVERGED the trace produced so far is still returned through
 * *out (may be NULL if the failure happened before the first record). */
GOPT_API gopt_status gopt_run_basin(const gopt_objective* obj, double lo,
                                    double hi, const gopt_run_config* cfg,
                                    gopt_trace** out);
GOPT_API gopt_status gopt_run_plain(const gopt_objective* obj, const double* x0,
                                    size_t dim, double step_size,
                                    uint64_t iterations, double stop_grad_tol,
                                    gopt_trace** out);
GOPT_API gopt_status gopt_run_multistart(const gopt_objective* obj, double lo,
                                         double hi, int n_starts,
                                         double step_size, uint64_t iterations,
                                         uint64_t seed, gopt_trace** out);

/* ---- traces ------------------------------------------------------------ */

typedef struct gopt_record_view {
  uint64_t k;
  double f;           /* f(x_k) */
  double f_z;         /* f(z_k), value at the scan argmin */
  double grad_norm;   /* ||grad f(z_k)|| */
  uint64_t scan_index;
  uint64_t value_evals;
  const double* x;    /* dim doubles, owned by the trace */
  const double* z;    /* dim doubles, owned by the trace */
} gopt_record_view;

#define GOPT_TERM_BUDGET 0
#define GOPT_TERM_GRAD_TOL 1

GOPT_API void gopt_trace_free(gopt_trace* trace);
GOPT_API uint64_t gopt_trace_length(const gopt_trace* trace);
GOPT_API int gopt_trace_dim(const gopt_trace* trace);
GOPT_API const char* gopt_trace_objective(const gopt_trace* trace);
GOPT_API int gopt_trace_termination(const gopt_trace* trace);
GOPT_API void gopt_trace_config(const gopt_trace* trace, gopt_run_config* out);
GOPT_API gopt_status gopt_trace_record(const gopt_trace* trace, uint64_t k,
                                       gopt_record_view* out);

GOPT_API gopt_status gopt_trace_save_csv(const gopt_trace* trace,
                                         const char* path);
GOPT_API gopt_status gopt_trace_load_csv(const char* path, gopt_trace** out);

/* ---- verification ------------------------------------------------------ */

/* Gradient vs central differences: worst per-coordinate error over `samples`
 * seeded interior points. */
GOPT_API gopt_status gopt_gradient_max_fd_error(const gopt_objective* obj,
                                                double lo, double hi,
                                                int samples, uint64_t seed,
                                                double h, double* out);

/* Sampled lower bound on the Lipschitz constant of the gradient. */
GOPT_API gopt_status gopt_estimate_lipschitz(const gopt_objective* obj,
                                             double lo, double hi, int samples,
                                             uint64_t seed, double* out);

/* Step indices violating f(x_k) <= f(z_k) - (t/2)||grad(z_k)||^2. Writes up
 * to `cap` indices into `out`; *total receives the full violation count. */
GOPT_API gopt_status gopt_verify_descent(const gopt_trace* trace, uint64_t* out,
                                         size_t cap, size_t* total);

/* Smallest M with ||x_k - x*|| <= r for all k >= M. *found is 0 when even
 * the final iterate sits outside the ball. */
GOPT_API gopt_status gopt_detect_ball_entry(const gopt_trace* trace,
                                            const double* x_star, size_t dim,
                                            double r, int* found, uint64_t* M);

/* Checks f(x_k) - f_star <= ||x_M - x*||^2 / (2t(k-M)) for all k > M. */
GOPT_API gopt_status gopt_verify_rate(const gopt_trace* trace,
                                      const double* x_star, size_t dim,
                                      double f_star, uint64_t M,
                                      gopt_rate_report** out);
GOPT_API void gopt_rate_report_free(gopt_rate_report* report);
GOPT_API int gopt_rate_report_passed(const gopt_rate_report* report);
GOPT_API uint64_t gopt_rate_report_entry_index(const gopt_rate_report* report);
GOPT_API size_t gopt_rate_report_violations(const gopt_rate_report* report);
GOPT_API gopt_status gopt_rate_report_violation(const gopt_rate_report* report,
                                                size_t i, uint64_t* k,
                                                double* lhs, double* rhs);

/* ---- global-minimality witness search ---------------------------------- */

/* h_z(x) = min{0, f(x) - f(z)}; identically zero iff z is a global
 * minimizer of f over the search box. */
GOPT_API gopt_status gopt_h_z(const gopt_objective* obj, const double* z,
                              const double* x, size_t dim, double* out);

/* Searches dyadic lattices over [lo,hi]^dim for a point that beats f(z).
 * *found = 1: *h_value < 0 and witness_out (dim doubles) holds a point with
 * f(witness) < f(z) - an explicit certificate that z is not a global
 * minimum. *found = 0 means Unknown; the search never certifies globality. */
GOPT_API gopt_status gopt_find_witness(const gopt_objective* obj,
                                       const double* z, size_t dim, double lo,
                                       double hi, int levels, uint64_t budget,
                                       int* found, double* witness_out,
                                       double* h_value, uint64_t* points_checked);

#ifdef __cplusplus
}
#endif

#endif /* GOPT_H */
