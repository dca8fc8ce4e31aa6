#include "analysis.hpp"

namespace gopt {

double check_gradient_fd(const Objective& objective, const Point& x, double h) {
  if (!(h > 0.0)) throw Error(ErrorCode::InvalidArgument, "fd step h must be positive");
  Point analytic = objective.gradient(x);
  Point probe = x;
  double worst = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    probe[i] = x[i] + h;
    double fp = objective.value(probe);
    probe[i] = x[i] - h;
    double fm = objective.value(probe);
    probe[i] = x[i];
    if (!std::isfinite(fp) || !std::isfinite(fm))
      throw Error(ErrorCode::NonFinite, "check_gradient_fd: non-finite probe value");
    double fd = (fp - fm) / (2.0 * h);
    double err = std::abs(analytic[i] - fd) / std::max(1.0, std::abs(fd));
    worst = std::max(worst, err);
  }
  return worst;
}

double max_fd_error_sampled(const Objective& objective, const HypercubeDomain& dom,
                            int samples, std::uint64_t seed, double h) {
  if (samples < 1) throw Error(ErrorCode::InvalidArgument, "samples must be positive");
  Rng rng(seed);
  double margin = 2.0 * h;
  Point x(dom.dim);
  double worst = 0.0;
  for (int s = 0; s < samples; ++s) {
    for (int i = 0; i < dom.dim; ++i)
      x[i] = rng.uniform(dom.lo + margin, dom.hi - margin);
    worst = std::max(worst, check_gradient_fd(objective, x, h));
  }
  return worst;
}

double estimate_lipschitz(const Objective& objective, const HypercubeDomain& dom,
                          int samples, std::uint64_t seed) {
  if (samples < 2)
    throw Error(ErrorCode::InvalidArgument, "estimate_lipschitz needs samples >= 2");
  Rng rng(seed);
  Point prev(dom.dim), cur(dom.dim);
  Point g_prev(dom.dim), g_cur(dom.dim);
  double best = 0.0;
  for (int s = 0; s < samples; ++s) {
    for (int i = 0; i < dom.dim; ++i) cur[i] = rng.uniform(dom.lo, dom.hi);
    objective.gradient(cur, g_cur);
    if (s > 0) {
      double dist = distance2(cur, prev);
      if (dist > 0.0) {
        double ratio = distance2(g_cur, g_prev) / dist;
        best = std::max(best, ratio);
      }
    }
    std::swap(prev, cur);
    std::swap(g_prev, g_cur);
  }
  return best;
}

std::vector<std::uint64_t> verify_monotone_descent(const Trace& trace) {
  if (trace.records.empty())
    throw Error(ErrorCode::InvalidArgument, "verify_monotone_descent: empty trace");
  const double t = trace.config.step_size;
  std::vector<std::uint64_t> violations;
  for (std::size_t i = 1; i < trace.records.size(); ++i) {
    const IterateRecord& r = trace.records[i];
    double bound = r.f_z - 0.5 * t * r.grad_norm * r.grad_norm;
    if (r.f_x > bound + kCheckSlack) violations.push_back(r.k);
  }
  return violations;
}

std::optional<std::uint64_t> detect_ball_entry(const Trace& trace,
                                               const Point& x_star, double r) {
  if (trace.records.empty())
    throw Error(ErrorCode::InvalidArgument, "detect_ball_entry: empty trace");
  require_dim(x_star.size(), static_cast<std::size_t>(trace.dim), "detect_ball_entry");
  if (!(r > 0.0)) throw Error(ErrorCode::InvalidArgument, "ball radius must be positive");

  for (std::size_t i = trace.records.size(); i-- > 0;) {
    if (distance2(trace.records[i].x, x_star) > r) {
      if (i + 1 == trace.records.size()) return std::nullopt;
      return trace.records[i + 1].k;
    }
  }
  return trace.records.front().k;
}

RateCheckReport verify_rate_bound(const Trace& trace, const Point& x_star,
                                  double f_star, std::uint64_t M) {
  if (trace.records.empty())
    throw Error(ErrorCode::InvalidArgument, "verify_rate_bound: empty trace");
  require_dim(x_star.size(), static_cast<std::size_t>(trace.dim), "verify_rate_bound");
  if (M + 1 >= trace.records.size())
    throw Error(ErrorCode::InvalidArgument,
                "verify_rate_bound: M must leave at least one later iterate");

  const double t = trace.config.step_size;
  double d = distance2(trace.records[M].x, x_star);
  double base = d * d;

  RateCheckReport report;
  report.entry_index = M;
  for (std::size_t i = M + 1; i < trace.records.size(); ++i) {
    const IterateRecord& r = trace.records[i];
    double lhs = r.f_x - f_star;
    double rhs = base / (2.0 * t * static_cast<double>(r.k - M));
    if (lhs > rhs + kCheckSlack) report.violations.push_back({r.k, lhs, rhs});
    double rhs_avg = base / (2.0 * t * static_cast<double>(r.k));
    if (lhs > rhs_avg + kCheckSlack)
      report.averaged_violations.push_back({r.k, lhs, rhs_avg});
  }
  report.passed = report.violations.empty();
  return report;
}

}  // namespace gopt
