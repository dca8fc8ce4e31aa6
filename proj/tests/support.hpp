#ifndef GOPT_TESTS_SUPPORT_HPP
#define GOPT_TESTS_SUPPORT_HPP

#include <functional>
#include <utility>

#include "objective.hpp"

namespace gopt::testing {

/// Ad-hoc objective for tests; gradient defaults to all-zero.
class SyntheticObjective final : public Objective {
 public:
  using ValueFn = std::function<double(std::span<const double>)>;
  using GradFn = std::function<void(std::span<const double>, std::span<double>)>;

  SyntheticObjective(std::string name, int dim, ValueFn value, GradFn grad = nullptr)
      : Objective(std::move(name), dim, HypercubeDomain(-10.0, 10.0, dim),
                  std::nullopt, std::nullopt),
        value_(std::move(value)),
        grad_(std::move(grad)) {}

 protected:
  double value_impl(std::span<const double> x) const override { return value_(x); }
  void gradient_impl(std::span<const double> x, std::span<double> out) const override {
    if (grad_) {
      grad_(x, out);
    } else {
      for (double& g : out) g = 0.0;
    }
  }

 private:
  ValueFn value_;
  GradFn grad_;
};

}  // namespace gopt::testing

#endif
