#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "analysis.hpp"
#include "optimizer.hpp"
#include "support.hpp"
#include "trace_io.hpp"

using namespace gopt;
using gopt::testing::SyntheticObjective;

TEST_CASE("gd_step is a single explicit update") {
  auto sph = make_benchmark("sphere", 2);
  Point out = gd_step(*sph, Point{1.0, 1.0}, 0.1);
  CHECK(out[0] == doctest::Approx(0.8).epsilon(1e-15));
  CHECK(out[1] == doctest::Approx(0.8).epsilon(1e-15));

  // stationary points are fixed points
  auto ras = make_benchmark("rastrigin", 2);
  CHECK(gd_step(*ras, Point{0.0, 0.0}, 0.3) == Point{0.0, 0.0});

  auto booth = make_benchmark("booth", 2);
  auto before = booth->eval_counts().gradient_evals;
  Point step = gd_step(*booth, Point{0.0, 0.0}, 0.005);
  CHECK(booth->eval_counts().gradient_evals == before + 1);
  // cross-check against the difference-quotient gradient
  double h = 1e-6;
  double gx = (booth->value(Point{h, 0.0}) - booth->value(Point{-h, 0.0})) / (2 * h);
  double gy = (booth->value(Point{0.0, h}) - booth->value(Point{0.0, -h})) / (2 * h);
  CHECK(step[0] == doctest::Approx(0.0 - 0.005 * gx).epsilon(1e-9));
  CHECK(step[1] == doctest::Approx(0.0 - 0.005 * gy).epsilon(1e-9));
}

TEST_CASE("plain gd on the sphere follows the closed form bit for bit") {
  auto sph = make_benchmark("sphere", 1);
  Trace tr = run_plain_gd(*sph, Point{1.0}, 0.25, 20, 0.0);
  REQUIRE(tr.records.size() == 21);
  double expect = 1.0;
  for (std::size_t k = 0; k < tr.records.size(); ++k) {
    CHECK(tr.records[k].k == k);
    CHECK(tr.records[k].x[0] == expect);        // x_k = 0.5^k
    CHECK(tr.records[k].f_x == expect * expect);  // f = 0.25^k
    expect *= 0.5;
  }
  CHECK(tr.termination == Termination::BudgetExhausted);
}

TEST_CASE("plain gd from the optimum stops immediately with a constant record") {
  auto booth = make_benchmark("booth", 2);
  Trace tr = run_plain_gd(*booth, Point{1.0, 3.0}, 0.005, 100, 0.0);
  REQUIRE(tr.records.size() == 1);
  CHECK(tr.records[0].x == Point{1.0, 3.0});
  CHECK(tr.records[0].f_x == 0.0);
  CHECK(tr.termination == Termination::GradientTolReached);
}

TEST_CASE("plain gd pulls rastrigin starts inside the central basin to zero") {
  auto ras = make_benchmark("rastrigin", 1);
  Trace tr = run_plain_gd(*ras, Point{0.3}, 0.0001, 50000, 0.0);
  CHECK(std::abs(tr.final_record().x[0]) <= 1e-3);
}

TEST_CASE("divergence carries the trace prefix and iteration index") {
  auto rosen = make_benchmark("rosenbrock", 2);
  try {
    run_plain_gd(*rosen, Point{-2.0, 2.0}, 0.01, 10000, 0.0);
    FAIL("expected divergence");
  } catch (const DivergenceError& e) {
    CHECK(e.at_iteration() > 0);
    CHECK(e.prefix().records.size() >= 1);
    CHECK(e.prefix().records.size() <= e.at_iteration() + 1);
  }
}

TEST_CASE("basin gd finds the rosenbrock optimum in the first scan") {
  auto rosen = make_benchmark("rosenbrock", 20);
  HypercubeDomain dom(-5.0, 5.0, 20);
  RunConfig cfg;
  cfg.step_size = 0.001;
  cfg.basin_bound = 0.5;
  cfg.max_iterations = 100;
  Trace tr = run_basin_gd(*rosen, dom, cfg);
  REQUIRE(tr.records.size() == 1);
  CHECK(tr.records[0].z == Point(20, 1.0));
  CHECK(tr.records[0].x == Point(20, 1.0));
  CHECK(tr.records[0].f_x == 0.0);
  CHECK(tr.termination == Termination::GradientTolReached);
}

TEST_CASE("basin gd on a 1-d sphere lands on the exact grid zero") {
  auto sph = make_benchmark("sphere", 1);
  HypercubeDomain dom(-5.0, 5.0, 1);
  RunConfig cfg;
  cfg.step_size = 0.1;
  cfg.basin_bound = 0.5;
  cfg.max_iterations = 50;
  Trace tr = run_basin_gd(*sph, dom, cfg);
  REQUIRE(tr.records.size() == 1);
  CHECK(tr.records[0].z == Point{0.0});
  CHECK(tr.records[0].x == Point{0.0});
  CHECK(tr.records[0].f_x == 0.0);
}

TEST_CASE("basin gd booth run converges with the reference parameters") {
  auto booth = make_benchmark("booth", 2);
  HypercubeDomain dom(-10.0, 10.0, 2);
  RunConfig cfg;
  cfg.step_size = 0.005;
  cfg.basin_bound = 0.3;
  cfg.scan_strategy = ScanStrategy::Lattice;
  cfg.max_iterations = 20000;
  Trace tr = run_basin_gd(*booth, dom, cfg);
  CHECK(tr.final_record().f_x <= 1e-3);

  // cross-check: plain descent started inside the basin reaches the same
  // optimum, so the scan+shift run must do at least as well
  auto booth2 = make_benchmark("booth", 2);
  Trace plain = run_plain_gd(*booth2, Point{1.1, 2.9}, 0.005, 20000, 0.0);
  CHECK(std::abs(tr.final_record().f_x - plain.final_record().f_x) <= 1e-3);
}

TEST_CASE("trace indices are consecutive and recorded values match the objective") {
  auto sph = make_benchmark("sphere", 2);
  HypercubeDomain dom(-5.0, 5.0, 2);
  RunConfig cfg;
  cfg.step_size = 0.05;
  cfg.basin_bound = 0.7;
  cfg.max_iterations = 30;
  Trace tr = run_basin_gd(*sph, dom, cfg);
  for (std::size_t i = 0; i < tr.records.size(); ++i) {
    CHECK(tr.records[i].k == i);
    CHECK(tr.records[i].f_x == sph->value(tr.records[i].x));
    CHECK(tr.records[i].f_z == sph->value(tr.records[i].z));
  }
}

TEST_CASE("one-point scan degenerates to plain gd from the corner") {
  auto sph = make_benchmark("sphere", 2);
  HypercubeDomain dom(-5.0, 5.0, 2);
  RunConfig cfg;
  cfg.step_size = 0.05;
  cfg.basin_bound = 11.0;  // wider than the box: the origin is the only point
  cfg.max_iterations = 40;
  cfg.clamp_to_domain = false;
  Trace basin = run_basin_gd(*sph, dom, cfg);

  auto sph2 = make_benchmark("sphere", 2);
  Trace plain = run_plain_gd(*sph2, Point{-5.0, -5.0}, 0.05, 41, 0.0);

  // the shifted single point replays the plain iterate sequence exactly:
  // z_k equals plain x_k, and (x_0 takes no step) x_k runs one step ahead
  REQUIRE(basin.records.size() == 41);
  REQUIRE(plain.records.size() == 42);
  for (std::size_t i = 0; i < basin.records.size(); ++i) {
    CHECK(basin.records[i].z == plain.records[i].x);
    CHECK(basin.records[i].f_z == plain.records[i].f_x);
  }
  CHECK(basin.records[0].x == plain.records[0].x);
  for (std::size_t i = 1; i < basin.records.size(); ++i) {
    CHECK(basin.records[i].x == plain.records[i + 1].x);
    CHECK(basin.records[i].f_x == plain.records[i + 1].f_x);
  }
}

TEST_CASE("descent inequality holds whenever t is below 1/L-hat") {
  for (const char* name : {"sphere", "rastrigin"}) {
    CAPTURE(name);
    auto obj = make_benchmark(name, 2);
    const HypercubeDomain& dom = obj->default_domain();
    BenchmarkParams p = paper_params(name);
    double l_hat = estimate_lipschitz(*obj, dom, 5000, 7);
    REQUIRE(p.step_size <= 1.0 / l_hat);

    RunConfig cfg;
    cfg.step_size = p.step_size;
    cfg.basin_bound = p.basin_bound;
    cfg.max_iterations = 500;
    Trace tr = run_basin_gd(*obj, dom, cfg);
    CHECK(verify_monotone_descent(tr).empty());
    for (std::size_t i = 1; i < tr.records.size(); ++i)
      CHECK(tr.records[i].f_x <= tr.records[i].f_z);
  }
}

TEST_CASE("multistart is deterministic and degenerates to plain gd") {
  auto ras = make_benchmark("rastrigin", 2);
  HypercubeDomain dom(-5.12, 5.12, 2);

  Trace a = run_multistart_gd(*ras, dom, 10, 0.0001, 500, 42);
  auto ras2 = make_benchmark("rastrigin", 2);
  Trace b = run_multistart_gd(*ras2, dom, 10, 0.0001, 500, 42);
  CHECK(a == b);

  // single start equals plain gd from the drawn point
  auto ras3 = make_benchmark("rastrigin", 2);
  Trace single = run_multistart_gd(*ras3, dom, 1, 0.0001, 200, 5);
  Rng rng(5);
  Point x0 = {rng.uniform(-5.12, 5.12), rng.uniform(-5.12, 5.12)};
  auto ras4 = make_benchmark("rastrigin", 2);
  Trace plain = run_plain_gd(*ras4, x0, 0.0001, 200, 0.0);
  CHECK(single.records == plain.records);
}

TEST_CASE("multistart with 100 seeded draws finds a near-global rastrigin basin") {
  auto ras = make_benchmark("rastrigin", 2);
  HypercubeDomain dom(-5.12, 5.12, 2);
  Trace best = run_multistart_gd(*ras, dom, 100, 0.0001, 2000, 7);
  CHECK(best.final_record().f_x <= 1.0);
}

TEST_CASE("repeated basin runs are bit-identical") {
  auto a = make_benchmark("rastrigin", 3);
  auto b = make_benchmark("rastrigin", 3);
  HypercubeDomain dom(-5.12, 5.12, 3);
  RunConfig cfg;
  cfg.step_size = 0.0001;
  cfg.basin_bound = 0.5;
  cfg.max_iterations = 200;
  Trace ta = run_basin_gd(*a, dom, cfg);
  Trace tb = run_basin_gd(*b, dom, cfg);
  CHECK(ta == tb);
}

TEST_CASE("invalid run parameters are rejected") {
  auto sph = make_benchmark("sphere", 2);
  HypercubeDomain dom(-5.0, 5.0, 2);
  RunConfig cfg;
  cfg.step_size = 0.0;
  CHECK_THROWS_AS(run_basin_gd(*sph, dom, cfg), Error);
  CHECK_THROWS_AS(run_plain_gd(*sph, Point{1.0, 1.0}, -0.1, 10, 0.0), Error);
  CHECK_THROWS_AS(run_multistart_gd(*sph, dom, 0, 0.1, 10, 1), Error);
  HypercubeDomain wrong(-5.0, 5.0, 3);
  CHECK_THROWS_AS(run_basin_gd(*sph, wrong, RunConfig{}), Error);
}
