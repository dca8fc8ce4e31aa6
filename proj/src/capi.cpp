#include "gopt/gopt.h"

#include <cstring>
#include <memory>

#include "analysis.hpp"
#include "core.hpp"
#include "limitcheck.hpp"
#include "objective.hpp"
#include "optimizer.hpp"
#include "trace_io.hpp"

struct gopt_objective {
  std::unique_ptr<gopt::Objective> impl;
};

struct gopt_trace {
  gopt::Trace impl;
};

struct gopt_rate_report {
  gopt::RateCheckReport impl;
};

namespace {

thread_local std::string g_last_error = "ok";

gopt_status status_of(const gopt::Error& e) {
  using gopt::ErrorCode;
  switch (e.code()) {
    case ErrorCode::InvalidArgument: return GOPT_ERR_INVALID_ARG;
    case ErrorCode::DimensionMismatch: return GOPT_ERR_DIMENSION;
    case ErrorCode::BudgetExceeded: return GOPT_ERR_BUDGET;
    case ErrorCode::NonFinite: return GOPT_ERR_NON_FINITE;
    case ErrorCode::Divergence: return GOPT_ERR_DIVERGED;
    case ErrorCode::Io: return GOPT_ERR_IO;
    case ErrorCode::Parse: return GOPT_ERR_PARSE;
  }
  return GOPT_ERR_INVALID_ARG;
}

gopt_status fail(gopt_status s, const char* what) {
  g_last_error = what;
  return s;
}

template <typename Fn>
gopt_status guarded(Fn&& fn) {
  try {
    fn();
    return GOPT_OK;
  } catch (const gopt::Error& e) {
    g_last_error = e.what();
    return status_of(e);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return GOPT_ERR_INVALID_ARG;
  }
}

gopt::Point to_point(const double* x, size_t dim) {
  return gopt::Point(x, x + dim);
}

gopt::RunConfig to_config(const gopt_run_config& c) {
  gopt::RunConfig cfg;
  cfg.step_size = c.step_size;
  cfg.basin_bound = c.basin_bound;
  cfg.max_iterations = c.max_iterations;
  cfg.scan_strategy = c.scan_strategy == GOPT_SCAN_LATTICE
                          ? gopt::ScanStrategy::Lattice
                          : gopt::ScanStrategy::Diagonal;
  cfg.lattice_point_budget = c.lattice_point_budget;
  cfg.clamp_to_domain = c.clamp_to_domain != 0;
  cfg.stop_grad_tol = c.stop_grad_tol;
  return cfg;
}

void from_config(const gopt::RunConfig& cfg, gopt_run_config& c) {
  c.step_size = cfg.step_size;
  c.basin_bound = cfg.basin_bound;
  c.max_iterations = cfg.max_iterations;
  c.scan_strategy = cfg.scan_strategy == gopt::ScanStrategy::Lattice
                        ? GOPT_SCAN_LATTICE
                        : GOPT_SCAN_DIAGONAL;
  c.lattice_point_budget = cfg.lattice_point_budget;
  c.clamp_to_domain = cfg.clamp_to_domain ? 1 : 0;
  c.stop_grad_tol = cfg.stop_grad_tol;
}

}  // namespace

extern "C" {

const char* gopt_last_error(void) { return g_last_error.c_str(); }

const char* gopt_version(void) { return "1.0.0"; }

gopt_status gopt_objective_create(const char* name, int dim, gopt_objective** out) {
  if (!name || !out) return fail(GOPT_ERR_INVALID_ARG, "null argument");
  *out = nullptr;
  return guarded([&] {
    auto handle = std::make_unique<gopt_objective>();
    handle->impl = gopt::make_benchmark(name, dim);
    *out = handle.release();
  });
}

void gopt_objective_free(gopt_objective* obj) { delete obj; }

int gopt_objective_dim(const gopt_objective* obj) {
  return obj ? obj->impl->dim() : 0;
}

const char* gopt_objective_name(const gopt_objective* obj) {
  return obj ? obj->impl->name().c_str() : "";
}

gopt_status gopt_objective_value(const gopt_objective* obj, const double* x,
                                 size_t dim, double* out) {
  if (!obj || !x || !out) return fail(GOPT_ERR_INVALID_ARG, "null argument");
  return guarded([&] { *out = obj->impl->value(std::span<const double>(x, dim)); });
}

gopt_status gopt_objective_gradient(const gopt_objective* obj, const double* x,
                                    size_t dim, double* out) {
  if (!obj || !x || !out) return fail(GOPT_ERR_INVALID_ARG, "null argument");
  return guarded([&] {
    obj->impl->gradient(std::span<const double>(x, dim),
                        std::span<double>(out, dim));
  });
}

gopt_status gopt_objective_optimum(const gopt_objective* obj, double* x_out,
                                   double* f_out) {
  if (!obj) return fail(GOPT_ERR_INVALID_ARG, "null argument");
  const auto& opt = obj->impl->known_optimum();
  if (!opt) return fail(GOPT_ERR_INVALID_ARG, "objective has no known optimum");
  if (x_out) std::memcpy(x_out, opt->data(), opt->size() * sizeof(double));
  if (f_out) *f_out = obj->impl->known_optimum_value().value_or(0.0);
  return GOPT_OK;
}

gopt_status gopt_objective_default_domain(const gopt_objective* obj, double* lo,
                                          double* hi) {
  if (!obj || !lo || !hi) return fail(GOPT_ERR_INVALID_ARG, "null argument");
  *lo = obj->impl->default_domain().lo;
  *hi = obj->impl->default_domain().hi;
  return GOPT_OK;
}

void gopt_objective_eval_counts(const gopt_objective* obj, uint64_t* value_evals,
                                uint64_t* gradient_evals) {
  if (!obj) return;
  gopt::CounterSnapshot s = obj->impl->eval_counts();
  if (value_evals) *value_evals = s.value_evals;
  if (gradient_evals) *gradient_evals = s.gradient_evals;
}

gopt_status gopt_paper_params(const char* name, double* step_size,
                              double* basin_bound) {
  if (!name) return fail(GOPT_ERR_INVALID_ARG, "null argument");
  return guarded([&] {
    gopt::BenchmarkParams p = gopt::paper_params(name);
    if (step_size) *step_size = p.step_size;
    if (basin_bound) *basin_bound = p.basin_bound;
  });
}

void gopt_run_config_init(gopt_run_config* cfg) {
  if (!cfg) return;
  from_config(gopt::RunConfig{}, *cfg);
}

gopt_status gopt_run_basin(const gopt_objective* obj, double lo, double hi,
                           const gopt_run_config* cfg, gopt_trace** out) {
  if (!obj || !cfg || !out) return fail(GOPT_ERR_INVALID_ARG, "null argument");
  *out = nullptr;
  try {
    gopt::HypercubeDomain dom(lo, hi, obj->impl->dim());
    auto trace = std::make_unique<gopt_trace>();
    trace->impl = gopt::run_basin_gd(*obj->impl, dom, to_config(*cfg));
    *out = trace.release();
    return GOPT_OK;
  } catch (const gopt::DivergenceError& e) {
    g_last_error = e.what();
    if (!e.prefix().records.empty())
      *out = new gopt_trace{e.prefix()};
    return GOPT_ERR_DIVERGED;
  } catch (const gopt::Error& e) {
    g_last_error = e.what();
    return status_of(e);
  }
}

gopt_status gopt_run_plain(const gopt_objective* obj, const double* x0, size_t dim,
                           double step_size, uint64_t iterations,
                           double stop_grad_tol, gopt_trace** out) {
  if (!obj || !x0 || !out) return fail(GOPT_ERR_INVALID_ARG, "null argument");
  *out = nullptr;
  try {
    auto trace = std::make_unique<gopt_trace>();
    trace->impl = gopt::run_plain_gd(*obj->impl, to_point(x0, dim), step_size,
                                     iterations, stop_grad_tol);
    *out = trace.release();
    return GOPT_OK;
  } catch (const gopt::DivergenceError& e) {
    g_last_error = e.what();
    if (!e.prefix().records.empty())
      *out = new gopt_trace{e.prefix()};
    return GOPT_ERR_DIVERGED;
  } catch (const gopt::Error& e) {
    g_last_error = e.what();
    return status_of(e);
  }
}

gopt_status gopt_run_multistart(const gopt_objective* obj, double lo, double hi,
                                int n_starts, double step_size,
                                uint64_t iterations, uint64_t seed,
                                gopt_trace** out) {
  if (!obj || !out) return fail(GOPT_ERR_INVALID_ARG, "null argument");
  *out = nullptr;
  return guarded([&] {
    gopt::HypercubeDomain dom(lo, hi, obj->impl->dim());
    auto trace = std::make_unique<gopt_trace>();
    trace->impl = gopt::run_multistart_gd(*obj->impl, dom, n_starts, step_size,
                                          iterations, seed);
    *out = trace.release();
  });
}

void gopt_trace_free(gopt_trace* trace) { delete trace; }

uint64_t gopt_trace_length(const gopt_trace* trace) {
  return trace ? trace->impl.records.size() : 0;
}

int gopt_trace_dim(const gopt_trace* trace) { return trace ? trace->impl.dim : 0; }

const char* gopt_trace_objective(const gopt_trace* trace) {
  return trace ? trace->impl.objective_name.c_str() : "";
}

int gopt_trace_termination(const gopt_trace* trace) {
  if (!trace) return GOPT_TERM_BUDGET;
  return trace->impl.termination == gopt::Termination::GradientTolReached
             ? GOPT_TERM_GRAD_TOL
             : GOPT_TERM_BUDGET;
}

void gopt_trace_config(const gopt_trace* trace, gopt_run_config* out) {
  if (!trace || !out) return;
  from_config(trace->impl.config, *out);
}

gopt_status gopt_trace_record(const gopt_trace* trace, uint64_t k,
                              gopt_record_view* out) {
  if (!trace || !out) return fail(GOPT_ERR_INVALID_ARG, "null argument");
  if (k >= trace->impl.records.size())
    return fail(GOPT_ERR_INVALID_ARG, "record index out of range");
  const gopt::IterateRecord& r = trace->impl.records[k];
  out->k = r.k;
  out->f = r.f_x;
  out->f_z = r.f_z;
  out->grad_norm = r.grad_norm;
  out->scan_index = r.scan_best_index;
  out->value_evals = r.value_evals_cum;
  out->x = r.x.data();
  out->z = r.z.data();
  return GOPT_OK;
}

gopt_status gopt_trace_save_csv(const gopt_trace* trace, const char* path) {
  if (!trace || !path) return fail(GOPT_ERR_INVALID_ARG, "null argument");
  return guarded([&] { gopt::save_trace_csv(trace->impl, path); });
}

gopt_status gopt_trace_load_csv(const char* path, gopt_trace** out) {
  if (!path || !out) return fail(GOPT_ERR_INVALID_ARG, "null argument");
  *out = nullptr;
  return guarded([&] {
    auto trace = std::make_unique<gopt_trace>();
    trace->impl = gopt::load_trace_csv(path);
    *out = trace.release();
  });
}

gopt_status gopt_gradient_max_fd_error(const gopt_objective* obj, double lo,
                                       double hi, int samples, uint64_t seed,
                                       double h, double* out) {
  if (!obj || !out) return fail(GOPT_ERR_INVALID_ARG, "null argument");
  return guarded([&] {
    gopt::HypercubeDomain dom(lo, hi, obj->impl->dim());
    *out = gopt::max_fd_error_sampled(*obj->impl, dom, samples, seed, h);
  });
}

gopt_status gopt_estimate_lipschitz(const gopt_objective* obj, double lo,
                                    double hi, int samples, uint64_t seed,
                                    double* out) {
  if (!obj || !out) return fail(GOPT_ERR_INVALID_ARG, "null argument");
  return guarded([&] {
    gopt::HypercubeDomain dom(lo, hi, obj->impl->dim());
    *out = gopt::estimate_lipschitz(*obj->impl, dom, samples, seed);
  });
}

gopt_status gopt_verify_descent(const gopt_trace* trace, uint64_t* out,
                                size_t cap, size_t* total) {
  if (!trace || !total) return fail(GOPT_ERR_INVALID_ARG, "null argument");
  return guarded([&] {
    std::vector<std::uint64_t> v = gopt::verify_monotone_descent(trace->impl);
    *total = v.size();
    if (out) {
      size_t n = std::min(cap, v.size());
      for (size_t i = 0; i < n; ++i) out[i] = v[i];
    }
  });
}

gopt_status gopt_detect_ball_entry(const gopt_trace* trace, const double* x_star,
                                   size_t dim, double r, int* found, uint64_t* M) {
  if (!trace || !x_star || !found) return fail(GOPT_ERR_INVALID_ARG, "null argument");
  return guarded([&] {
    auto entry = gopt::detect_ball_entry(trace->impl, to_point(x_star, dim), r);
    *found = entry.has_value() ? 1 : 0;
    if (M && entry) *M = *entry;
  });
}

gopt_status gopt_verify_rate(const gopt_trace* trace, const double* x_star,
                             size_t dim, double f_star, uint64_t M,
                             gopt_rate_report** out) {
  if (!trace || !x_star || !out) return fail(GOPT_ERR_INVALID_ARG, "null argument");
  *out = nullptr;
  return guarded([&] {
    auto report = std::make_unique<gopt_rate_report>();
    report->impl =
        gopt::verify_rate_bound(trace->impl, to_point(x_star, dim), f_star, M);
    *out = report.release();
  });
}

void gopt_rate_report_free(gopt_rate_report* report) { delete report; }

int gopt_rate_report_passed(const gopt_rate_report* report) {
  return report && report->impl.passed ? 1 : 0;
}

uint64_t gopt_rate_report_entry_index(const gopt_rate_report* report) {
  return report ? report->impl.entry_index : 0;
}

size_t gopt_rate_report_violations(const gopt_rate_report* report) {
  return report ? report->impl.violations.size() : 0;
}

gopt_status gopt_rate_report_violation(const gopt_rate_report* report, size_t i,
                                       uint64_t* k, double* lhs, double* rhs) {
  if (!report) return fail(GOPT_ERR_INVALID_ARG, "null argument");
  if (i >= report->impl.violations.size())
    return fail(GOPT_ERR_INVALID_ARG, "violation index out of range");
  const gopt::RateViolation& v = report->impl.violations[i];
  if (k) *k = v.k;
  if (lhs) *lhs = v.lhs;
  if (rhs) *rhs = v.rhs;
  return GOPT_OK;
}

gopt_status gopt_h_z(const gopt_objective* obj, const double* z, const double* x,
                     size_t dim, double* out) {
  if (!obj || !z || !x || !out) return fail(GOPT_ERR_INVALID_ARG, "null argument");
  return guarded([&] {
    *out = gopt::h_z(*obj->impl, to_point(z, dim), to_point(x, dim));
  });
}

gopt_status gopt_find_witness(const gopt_objective* obj, const double* z,
                              size_t dim, double lo, double hi, int levels,
                              uint64_t budget, int* found, double* witness_out,
                              double* h_value, uint64_t* points_checked) {
  if (!obj || !z || !found) return fail(GOPT_ERR_INVALID_ARG, "null argument");
  return guarded([&] {
    gopt::HypercubeDomain dom(lo, hi, obj->impl->dim());
    gopt::WitnessOutcome w = gopt::find_nonzero_witness(
        *obj->impl, to_point(z, dim), dom, levels, budget);
    *found = w.status == gopt::WitnessStatus::WitnessFound ? 1 : 0;
    if (w.witness && witness_out)
      std::memcpy(witness_out, w.witness->data(), w.witness->size() * sizeof(double));
    if (h_value) *h_value = w.h_value.value_or(0.0);
    if (points_checked) *points_checked = w.points_checked;
  });
}

}  // extern "C"
