#include <numbers>

#include "objective.hpp"

namespace gopt {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

class Rastrigin final : public Objective {
 public:
  explicit Rastrigin(int dim)
      : Objective("rastrigin", dim, HypercubeDomain(-5.12, 5.12, dim),
                  Point(dim, 0.0), 0.0) {}

 protected:
  double value_impl(std::span<const double> x) const override {
    // per-term grouping keeps each summand >= 0 in floating point
    double s = 0.0;
    for (double c : x) s += (c * c - 10.0 * std::cos(kTwoPi * c)) + 10.0;
    return s;
  }
  void gradient_impl(std::span<const double> x, std::span<double> g) const override {
    for (std::size_t i = 0; i < x.size(); ++i)
      g[i] = 2.0 * x[i] + 10.0 * kTwoPi * std::sin(kTwoPi * x[i]);
  }
};

class Ackley final : public Objective {
 public:
  Ackley()
      : Objective("ackley", 2, HypercubeDomain(-5.0, 5.0, 2), Point{0.0, 0.0}, 0.0) {}

 protected:
  double value_impl(std::span<const double> x) const override {
    double rho = std::sqrt(0.5 * (x[0] * x[0] + x[1] * x[1]));
    double c = 0.5 * (std::cos(kTwoPi * x[0]) + std::cos(kTwoPi * x[1]));
    return (20.0 - 20.0 * std::exp(-0.2 * rho)) + (std::exp(1.0) - std::exp(c));
  }
  void gradient_impl(std::span<const double> x, std::span<double> g) const override {
    double rho = std::sqrt(0.5 * (x[0] * x[0] + x[1] * x[1]));
    double c = 0.5 * (std::cos(kTwoPi * x[0]) + std::cos(kTwoPi * x[1]));
    if (rho == 0.0) {
      // the sqrt term has a cone at the origin; the origin is also the
      // global minimizer, so the descent fixed point takes gradient zero
      g[0] = 0.0;
      g[1] = 0.0;
      return;
    }
    double radial = 2.0 * std::exp(-0.2 * rho) / rho;
    double es = std::exp(c);
    g[0] = radial * x[0] + std::numbers::pi * std::sin(kTwoPi * x[0]) * es;
    g[1] = radial * x[1] + std::numbers::pi * std::sin(kTwoPi * x[1]) * es;
  }
};

class Sphere final : public Objective {
 public:
  explicit Sphere(int dim)
      : Objective("sphere", dim, HypercubeDomain(-5.0, 5.0, dim), Point(dim, 0.0), 0.0) {}

 protected:
  double value_impl(std::span<const double> x) const override {
    double s = 0.0;
    for (double c : x) s += c * c;
    return s;
  }
  void gradient_impl(std::span<const double> x, std::span<double> g) const override {
    for (std::size_t i = 0; i < x.size(); ++i) g[i] = 2.0 * x[i];
  }
};

class Rosenbrock final : public Objective {
 public:
  explicit Rosenbrock(int dim)
      : Objective("rosenbrock", dim, HypercubeDomain(-5.0, 5.0, dim),
                  Point(dim, 1.0), 0.0) {}

 protected:
  double value_impl(std::span<const double> x) const override {
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
      double a = x[i + 1] - x[i] * x[i];
      double b = 1.0 - x[i];
      s += 100.0 * a * a + b * b;
    }
    return s;
  }
  void gradient_impl(std::span<const double> x, std::span<double> g) const override {
    std::size_t n = x.size();
    for (std::size_t i = 0; i < n; ++i) g[i] = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      double a = x[i + 1] - x[i] * x[i];
      g[i] += -400.0 * x[i] * a - 2.0 * (1.0 - x[i]);
      g[i + 1] += 200.0 * a;
    }
  }
};

class Beale final : public Objective {
 public:
  Beale()
      : Objective("beale", 2, HypercubeDomain(-4.5, 4.5, 2), Point{3.0, 0.5}, 0.0) {}

 protected:
  double value_impl(std::span<const double> p) const override {
    double x = p[0], y = p[1];
    double e1 = 1.5 - x + x * y;
    double e2 = 2.25 - x + x * y * y;
    double e3 = 2.625 - x + x * y * y * y;
    return e1 * e1 + e2 * e2 + e3 * e3;
  }
  void gradient_impl(std::span<const double> p, std::span<double> g) const override {
    double x = p[0], y = p[1];
    double y2 = y * y, y3 = y2 * y;
    double e1 = 1.5 - x + x * y;
    double e2 = 2.25 - x + x * y2;
    double e3 = 2.625 - x + x * y3;
    g[0] = 2.0 * (e1 * (y - 1.0) + e2 * (y2 - 1.0) + e3 * (y3 - 1.0));
    g[1] = 2.0 * x * (e1 + 2.0 * y * e2 + 3.0 * y2 * e3);
  }
};

class Booth final : public Objective {
 public:
  Booth()
      : Objective("booth", 2, HypercubeDomain(-10.0, 10.0, 2), Point{1.0, 3.0}, 0.0) {}

 protected:
  double value_impl(std::span<const double> p) const override {
    double a = p[0] + 2.0 * p[1] - 7.0;
    double b = 2.0 * p[0] + p[1] - 5.0;
    return a * a + b * b;
  }
  void gradient_impl(std::span<const double> p, std::span<double> g) const override {
    double a = p[0] + 2.0 * p[1] - 7.0;
    double b = 2.0 * p[0] + p[1] - 5.0;
    g[0] = 2.0 * a + 4.0 * b;
    g[1] = 4.0 * a + 2.0 * b;
  }
};

void require_dim_at_least(const std::string& name, int dim, int min) {
  if (dim < min)
    throw Error(ErrorCode::InvalidArgument,
                name + " requires dimension >= " + std::to_string(min) + " (got " +
                    std::to_string(dim) + ")");
}

void require_dim_exactly(const std::string& name, int dim, int want) {
  if (dim != want)
    throw Error(ErrorCode::InvalidArgument,
                name + " is defined in " + std::to_string(want) +
                    " variables (got dimension " + std::to_string(dim) + ")");
}

}  // namespace

std::unique_ptr<Objective> make_benchmark(const std::string& name, int dim) {
  if (name == "rastrigin") {
    require_dim_at_least(name, dim, 1);
    return std::make_unique<Rastrigin>(dim);
  }
  if (name == "ackley") {
    require_dim_exactly(name, dim, 2);
    return std::make_unique<Ackley>();
  }
  if (name == "sphere") {
    require_dim_at_least(name, dim, 1);
    return std::make_unique<Sphere>(dim);
  }
  if (name == "rosenbrock") {
    require_dim_at_least(name, dim, 2);
    return std::make_unique<Rosenbrock>(dim);
  }
  if (name == "beale") {
    require_dim_exactly(name, dim, 2);
    return std::make_unique<Beale>();
  }
  if (name == "booth") {
    require_dim_exactly(name, dim, 2);
    return std::make_unique<Booth>();
  }
  throw Error(ErrorCode::InvalidArgument, "unknown benchmark: " + name);
}

BenchmarkParams paper_params(const std::string& name) {
  if (name == "rastrigin") return {0.0001, 0.5};
  if (name == "ackley") return {0.0001, 0.1};
  if (name == "sphere") return {0.001, 0.3};
  if (name == "rosenbrock") return {0.001, 0.5};
  if (name == "beale") return {0.0005, 0.3};
  if (name == "booth") return {0.005, 0.3};
  throw Error(ErrorCode::InvalidArgument, "unknown benchmark: " + name);
}

const std::vector<std::string>& benchmark_names() {
  static const std::vector<std::string> names = {"rastrigin", "ackley","sphere",
                                                 "rosenbrock", "beale", "booth"};
  return names;
}

}  // namespace gopt
