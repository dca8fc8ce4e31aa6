#ifndef GOPT_ANALYSIS_HPP
#define GOPT_ANALYSIS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "core.hpp"
#include "objective.hpp"
#include "optimizer.hpp"

namespace gopt {

/// Absolute slack applied to every inequality check below; covers double
/// rounding accumulation for traces up to ~1e6 records.
inline constexpr double kCheckSlack = 1e-9;

/// Max over coordinates of the mismatch between the analytic gradient and
/// the central difference (f(x+h*e_i) - f(x-h*e_i)) / 2h, relative where the
/// difference quotient exceeds 1 in magnitude, absolute below that.
double check_gradient_fd(const Objective& objective, const Point& x, double h);

/// check_gradient_fd maximized over `samples` seeded uniform draws from the
/// box shrunk by a 2h margin.
double max_fd_error_sampled(const Objective& objective, const HypercubeDomain& dom,
                            int samples, std::uint64_t seed, double h);

/// Lower bound on the gradient Lipschitz constant: the largest
/// ||grad(x)-grad(y)|| / ||x-y|| over consecutive pairs of seeded uniform
/// samples. Returns 0 for an affine objective (degenerate: any step passes).
double estimate_lipschitz(const Objective& objective, const HypercubeDomain& dom,
                          int samples, std::uint64_t seed);

/// Indices k >= 1 where the step from z_k violated
///   f(x_k) <= f(z_k) - (t/2)*||grad(z_k)||^2 + slack.
/// Record 0 is the seed state, not a step, and is never checked.
std::vector<std::uint64_t> verify_monotone_descent(const Trace& trace);

/// Smallest M such that ||x_k - x*|| <= r for every k >= M through the end
/// of the trace; nullopt when even the final record is outside the ball.
std::optional<std::uint64_t> detect_ball_entry(const Trace& trace,
                                               const Point& x_star, double r);

struct RateViolation {
  std::uint64_t k;
  double lhs;
  double rhs;
};

struct RateCheckReport {
  std::uint64_t entry_index = 0;  // M
  std::vector<RateViolation> violations;
  // informational: the same bound with denominator 2tk instead of 2t(k-M);
  // not established for M > 0, so it never affects `passed`
  std::vector<RateViolation> averaged_violations;
  bool passed = false;
};

/// Checks f(x_k) - f_star <= ||x_M - x*||^2 / (2t(k-M)) + slack for every
/// k > M.
RateCheckReport verify_rate_bound(const Trace& trace, const Point& x_star,
                                  double f_star, std::uint64_t M);

}  // namespace gopt

#endif
