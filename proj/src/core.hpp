#ifndef GOPT_CORE_HPP
#define GOPT_CORE_HPP

#include <atomic>
#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace gopt {

using Point = std::vector<double>;

enum class ErrorCode {
  InvalidArgument,
  DimensionMismatch,
  BudgetExceeded,
  NonFinite,
  Divergence,
  Io,
  Parse,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Closed search box [lo, hi]^dim, same interval on every axis.
struct HypercubeDomain {
  double lo;
  double hi;
  int dim;

  HypercubeDomain(double a, double b, int d) : lo(a), hi(b), dim(d) {
    if (!(a < b)) throw Error(ErrorCode::InvalidArgument, "domain requires lo < hi");
    if (d < 1) throw Error(ErrorCode::InvalidArgument, "domain dimension must be >= 1");
    if (!std::isfinite(a) || !std::isfinite(b))
      throw Error(ErrorCode::NonFinite, "domain bounds must be finite");
  }

  double side() const { return hi - lo; }
};

bool contains(const HypercubeDomain& dom, const Point& p);
Point clamp_to_domain(const Point& p, const HypercubeDomain& dom);

struct CounterSnapshot {
  std::uint64_t value_evals = 0;
  std::uint64_t gradient_evals = 0;
};

/// Monotone evaluation counters. Atomics so parallel scans can share one
/// objective instance.
class EvalCounters {
 public:
  void bump_value() const { value_evals_.fetch_add(1, std::memory_order_relaxed); }
  void bump_gradient() const { gradient_evals_.fetch_add(1, std::memory_order_relaxed); }
  CounterSnapshot snapshot() const {
    return {value_evals_.load(std::memory_order_relaxed),
            gradient_evals_.load(std::memory_order_relaxed)};
  }

 private:
  mutable std::atomic<std::uint64_t> value_evals_{0};
  mutable std::atomic<std::uint64_t> gradient_evals_{0};
};

enum class ScanStrategy { Diagonal, Lattice };

struct RunConfig {
  double step_size = 1e-3;
  double basin_bound = 0.5;
  std::uint64_t max_iterations = 1000;
  ScanStrategy scan_strategy = ScanStrategy::Diagonal;
  std::uint64_t lattice_point_budget = 1000000;
  bool clamp_to_domain = true;
  double stop_grad_tol = 0.0;
};

/// Deterministic uniform doubles. mt19937_64 output is pinned by the
/// standard and the 53-bit scaling below avoids the library-defined
/// distribution classes, so streams are reproducible everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double next_unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

 private:
  std::mt19937_64 engine_;
};

inline bool all_finite(std::span<const double> v) {
  for (double x : v)
    if (!std::isfinite(x)) return false;
  return true;
}

inline double norm2(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

inline double distance2(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    double d = a[i] - b[i];
    s += d * d;
  }
  return std::sqrt(s);
}

inline void require_dim(std::size_t got, std::size_t want, const char* what) {
  if (got != want)
    throw Error(ErrorCode::DimensionMismatch,
                std::string(what) + ": dimension mismatch (got " +
                    std::to_string(got) + ", want " + std::to_string(want) + ")");
}

}  // namespace gopt

#endif
