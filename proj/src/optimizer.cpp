#include "optimizer.hpp"

#include "scan.hpp"

namespace gopt {

namespace {

std::vector<Point> make_scan_points(const HypercubeDomain& dom, const Point& origin,
                                    const RunConfig& cfg) {
  std::vector<Point> pts =
      cfg.scan_strategy == ScanStrategy::Diagonal
          ? diagonal_points(dom, origin, cfg.basin_bound)
          : lattice_points(dom, origin, cfg.basin_bound, cfg.lattice_point_budget);
  if (cfg.clamp_to_domain)
    for (Point& p : pts) p = clamp_to_domain(p, dom);
  return pts;
}

[[noreturn]] void diverged(Trace&& prefix, std::uint64_t k, const std::string& what) {
  throw DivergenceError(std::move(prefix), k,
                        what + " at iteration " + std::to_string(k));
}

}  // namespace

Point gd_step(const Objective& objective, const Point& z, double t) {
  if (!(t > 0.0)) throw Error(ErrorCode::InvalidArgument, "step size must be positive");
  Point g = objective.gradient(z);
  if (!all_finite(g))
    throw Error(ErrorCode::NonFinite, "gd_step: non-finite gradient");
  Point x(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) x[i] = z[i] - t * g[i];
  return x;
}

Trace run_basin_gd(const Objective& objective, const HypercubeDomain& dom,
                   const RunConfig& cfg) {
  require_dim(static_cast<std::size_t>(objective.dim()),
              static_cast<std::size_t>(dom.dim), "run_basin_gd");
  if (!(cfg.step_size > 0.0))
    throw Error(ErrorCode::InvalidArgument, "step size must be positive");
  if (!(cfg.basin_bound > 0.0))
    throw Error(ErrorCode::InvalidArgument, "basin bound must be positive");

  Trace tr;
  tr.config = cfg;
  tr.objective_name = objective.name();
  tr.dim = objective.dim();
  tr.termination = Termination::BudgetExhausted;

  const double t = cfg.step_size;
  Point origin(dom.dim, dom.lo);
  Point grad(dom.dim);

  for (std::uint64_t k = 0; k <= cfg.max_iterations; ++k) {
    if (k > 0) {
      // shift the whole grid by the step taken from the previous argmin
      for (int i = 0; i < dom.dim; ++i) origin[i] -= t * grad[i];
      if (!all_finite(origin)) diverged(std::move(tr), k, "non-finite scan origin");
    }
    std::vector<Point> pts = make_scan_points(dom, origin, cfg);
    ScanResult scan = scan_argmin(pts, objective);

    Point z = std::move(scan.best_point);
    objective.gradient(z, grad);
    double gn = norm2(grad);
    if (!std::isfinite(gn)) diverged(std::move(tr), k, "non-finite gradient");

    Point x;
    double f_x;
    if (k == 0) {
      x = z;
      f_x = scan.best_value;
    } else {
      x.resize(z.size());
      for (std::size_t i = 0; i < z.size(); ++i) x[i] = z[i] - t * grad[i];
      if (!all_finite(x)) diverged(std::move(tr), k, "non-finite iterate");
      f_x = objective.value(x);
      if (!std::isfinite(f_x)) diverged(std::move(tr), k, "non-finite value");
    }

    tr.records.push_back({k, std::move(z), std::move(x), f_x, scan.best_value, gn,
                          scan.best_index, objective.eval_counts().value_evals});
    if (gn <= cfg.stop_grad_tol) {
      tr.termination = Termination::GradientTolReached;
      break;
    }
  }
  return tr;
}

Trace run_plain_gd(const Objective& objective, const Point& x0, double t,
                   std::uint64_t iters, double stop_grad_tol) {
  require_dim(x0.size(), static_cast<std::size_t>(objective.dim()), "run_plain_gd");
  if (!all_finite(x0)) throw Error(ErrorCode::NonFinite, "run_plain_gd: non-finite x0");
  if (!(t > 0.0)) throw Error(ErrorCode::InvalidArgument, "step size must be positive");

  Trace tr;
  tr.config.step_size = t;
  tr.config.basin_bound = 0.0;
  tr.config.max_iterations = iters;
  tr.config.scan_strategy = ScanStrategy::Diagonal;
  tr.config.lattice_point_budget = 0;
  tr.config.clamp_to_domain = false;
  tr.config.stop_grad_tol = stop_grad_tol;
  tr.objective_name = objective.name();
  tr.dim = objective.dim();
  tr.termination = Termination::BudgetExhausted;

  Point x = x0;
  double f = objective.value(x);
  if (!std::isfinite(f)) diverged(std::move(tr), 0, "non-finite value");
  Point g = objective.gradient(x);
  double gn = norm2(g);
  if (!std::isfinite(gn)) diverged(std::move(tr), 0, "non-finite gradient");

  tr.records.push_back({0, x, x, f, f, gn, 0, objective.eval_counts().value_evals});
  if (gn <= stop_grad_tol) {
    tr.termination = Termination::GradientTolReached;
    return tr;
  }

  for (std::uint64_t k = 1; k <= iters; ++k) {
    Point next(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) next[i] = x[i] - t * g[i];
    if (!all_finite(next)) diverged(std::move(tr), k, "non-finite iterate");
    double f_next = objective.value(next);
    if (!std::isfinite(f_next)) diverged(std::move(tr), k, "non-finite value");

    tr.records.push_back({k, x, next, f_next, f, gn, 0,
                          objective.eval_counts().value_evals});
    if (gn <= stop_grad_tol) {
      tr.termination = Termination::GradientTolReached;
      return tr;
    }
    x = std::move(next);
    f = f_next;
    if (k < iters) {
      objective.gradient(x, g);
      gn = norm2(g);
      if (!std::isfinite(gn)) diverged(std::move(tr), k, "non-finite gradient");
    }
  }
  return tr;
}

Trace run_multistart_gd(const Objective& objective, const HypercubeDomain& dom,
                        int n_starts, double t, std::uint64_t iters,
                        std::uint64_t seed) {
  require_dim(static_cast<std::size_t>(objective.dim()),
              static_cast<std::size_t>(dom.dim), "run_multistart_gd");
  if (n_starts < 1)
    throw Error(ErrorCode::InvalidArgument, "n_starts must be at least 1");

  Rng rng(seed);
  std::vector<Point> starts(n_starts);
  for (Point& s : starts) {
    s.resize(dom.dim);
    for (int i = 0; i < dom.dim; ++i) s[i] = rng.uniform(dom.lo, dom.hi);
  }

  Trace best;
  bool have_best = false;
  for (const Point& s : starts) {
    Trace tr = run_plain_gd(objective, s, t, iters, 0.0);
    if (!have_best || tr.final_record().f_x < best.final_record().f_x) {
      best = std::move(tr);
      have_best = true;
    }
  }
  return best;
}

}  // namespace gopt
