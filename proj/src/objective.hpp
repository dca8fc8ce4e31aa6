#ifndef GOPT_OBJECTIVE_HPP
#define GOPT_OBJECTIVE_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "core.hpp"

namespace gopt {

/// A named differentiable objective with analytic gradient, optional known
/// optimum, and a default search box. Evaluation is pure apart from the
/// shared counters, so one instance can serve many threads.
class Objective {
 public:
  virtual ~Objective() = default;

  const std::string& name() const { return name_; }
  int dim() const { return dim_; }
  const std::optional<Point>& known_optimum() const { return optimum_; }
  std::optional<double> known_optimum_value() const { return optimum_value_; }
  const HypercubeDomain& default_domain() const { return domain_; }
  CounterSnapshot eval_counts() const { return counters_.snapshot(); }

  double value(std::span<const double> x) const {
    check_input(x, "value");
    counters_.bump_value();
    double f = value_impl(x);
    if (std::isnan(f)) throw Error(ErrorCode::NonFinite, name_ + ": value is NaN");
    return f;
  }

  void gradient(std::span<const double> x, std::span<double> out) const {
    check_input(x, "gradient");
    require_dim(out.size(), static_cast<std::size_t>(dim_), "gradient output");
    counters_.bump_gradient();
    gradient_impl(x, out);
    for (double g : out)
      if (std::isnan(g)) throw Error(ErrorCode::NonFinite, name_ + ": gradient is NaN");
  }

  Point gradient(const Point& x) const {
    Point g(dim_);
    gradient(std::span<const double>(x), std::span<double>(g));
    return g;
  }

 protected:
  Objective(std::string name, int dim, HypercubeDomain domain,
            std::optional<Point> optimum, std::optional<double> optimum_value)
      : name_(std::move(name)),
        dim_(dim),
        domain_(domain),
        optimum_(std::move(optimum)),
        optimum_value_(optimum_value) {}

  virtual double value_impl(std::span<const double> x) const = 0;
  virtual void gradient_impl(std::span<const double> x, std::span<double> out) const = 0;

 private:
  void check_input(std::span<const double> x, const char* what) const {
    require_dim(x.size(), static_cast<std::size_t>(dim_), what);
    if (!all_finite(x))
      throw Error(ErrorCode::NonFinite, name_ + ": non-finite input coordinate");
  }

  std::string name_;
  int dim_;
  HypercubeDomain domain_;
  std::optional<Point> optimum_;
  std::optional<double> optimum_value_;
  EvalCounters counters_;
};

struct BenchmarkParams {
  double step_size;
  double basin_bound;
};

/// Registry of the six built-in benchmarks, addressable by lowercase name:
/// rastrigin, ackley, sphere, rosenbrock, beale, booth.
std::unique_ptr<Objective> make_benchmark(const std::string& name, int dim);
BenchmarkParams paper_params(const std::string& name);
const std::vector<std::string>& benchmark_names();

}  // namespace gopt

#endif
