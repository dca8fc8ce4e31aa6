#ifndef GOPT_OPTIMIZER_HPP
#define GOPT_OPTIMIZER_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "core.hpp"
#include "objective.hpp"

namespace gopt {

/// One iteration of a run. Record 0 is the starting state (x equals z, no
/// gradient step has happened yet); every later record describes the step
/// x = z - t*grad(z). f_x and f_z are the values actually evaluated during
/// the run, stored bit-identically, and grad_norm is the norm of the
/// gradient at z that drove the step.
struct IterateRecord {
  std::uint64_t k = 0;
  Point z;
  Point x;
  double f_x = 0.0;
  double f_z = 0.0;
  double grad_norm = 0.0;
  std::uint64_t scan_best_index = 0;
  std::uint64_t value_evals_cum = 0;
};

enum class Termination { BudgetExhausted, GradientTolReached };

struct Trace {
  std::vector<IterateRecord> records;
  RunConfig config;
  std::string objective_name;
  int dim = 0;
  Termination termination = Termination::BudgetExhausted;

  const IterateRecord& final_record() const { return records.back(); }
};

/// Raised when a run produces a non-finite iterate, gradient, or value.
/// Carries the trace up to (not including) the failing iteration.
class DivergenceError : public Error {
 public:
  DivergenceError(Trace prefix, std::uint64_t at_iteration, const std::string& what)
      : Error(ErrorCode::Divergence, what),
        prefix_(std::move(prefix)),
        at_iteration_(at_iteration) {}

  const Trace& prefix() const { return prefix_; }
  std::uint64_t at_iteration() const { return at_iteration_; }

 private:
  Trace prefix_;
  std::uint64_t at_iteration_;
};

/// Single descent update z - t*grad(z); exactly one gradient evaluation.
Point gd_step(const Objective& objective, const Point& z, double t);

/// The grid-shift algorithm: scan the m-spaced candidate set from the box
/// corner, pick the argmin z_0 (= x_0), then each iteration move the scan
/// origin by -t*grad(previous argmin), rescan, and step x_k = z_k - t*grad(z_k).
/// Stops on the iteration budget or once grad_norm <= stop_grad_tol.
Trace run_basin_gd(const Objective& objective, const HypercubeDomain& dom,
                   const RunConfig& config);

/// Plain constant-step gradient descent from x0.
Trace run_plain_gd(const Objective& objective, const Point& x0, double t,
                   std::uint64_t iters, double stop_grad_tol);

/// Plain GD from n_starts seeded uniform draws over the box; returns the
/// trace of the best run (lowest final value, ties to the lowest start index).
Trace run_multistart_gd(const Objective& objective, const HypercubeDomain& dom,
                        int n_starts, double t, std::uint64_t iters,
                        std::uint64_t seed);

}  // namespace gopt

#endif
