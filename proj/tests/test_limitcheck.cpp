#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "limitcheck.hpp"

using namespace gopt;

TEST_CASE("h is identically zero at a global minimizer and clamped elsewhere") {
  auto sph2 = make_benchmark("sphere", 2);
  for (double c : {-4.0, -0.5, 0.0, 1.0, 3.7})
    CHECK(h_z(*sph2, Point{0.0, 0.0}, Point{c, -c}) == 0.0);

  auto sph1 = make_benchmark("sphere", 1);
  // x does not beat z: clamped to zero
  CHECK(h_z(*sph1, Point{1.0}, Point{2.0}) == 0.0);
  CHECK(h_z(*sph1, Point{0.5}, Point{1.0}) == 0.0);
  // x beats z: the gap is the certificate
  CHECK(h_z(*sph1, Point{1.0}, Point{0.0}) == -1.0);
  CHECK(h_z(*sph1, Point{2.0}, Point{0.0}) == -4.0);
}

TEST_CASE("h properties: never positive, zero on the diagonal") {
  auto ras = make_benchmark("rastrigin", 2);
  Rng rng(31);
  for (int i = 0; i < 200; ++i) {
    Point z = {rng.uniform(-5.12, 5.12), rng.uniform(-5.12, 5.12)};
    Point x = {rng.uniform(-5.12, 5.12), rng.uniform(-5.12, 5.12)};
    CHECK(h_z(*ras, z, x) <= 0.0);
    CHECK(h_z(*ras, z, z) == 0.0);
  }
}

TEST_CASE("witness search certifies a non-optimal sphere point") {
  auto sph = make_benchmark("sphere", 1);
  HypercubeDomain dom(-5.0, 5.0, 1);
  WitnessOutcome w = find_nonzero_witness(*sph, Point{1.0}, dom, 20, 100000);
  REQUIRE(w.status == WitnessStatus::WitnessFound);
  REQUIRE(w.witness.has_value());
  REQUIRE(w.h_value.has_value());
  CHECK(*w.h_value < 0.0);
  CHECK(std::abs((*w.witness)[0]) < 1.0);
  // the certificate is re-checkable by direct evaluation
  CHECK(sph->value(*w.witness) < sph->value(Point{1.0}));
}

TEST_CASE("witness search answers Unknown for the actual optimum at any budget") {
  auto sph = make_benchmark("sphere", 1);
  HypercubeDomain dom(-5.0, 5.0, 1);
  for (std::uint64_t budget : {1ull, 100ull, 10000ull, 1000000ull}) {
    WitnessOutcome w = find_nonzero_witness(*sph, Point{0.0}, dom, 18, budget);
    CHECK(w.status == WitnessStatus::Unknown);
    CHECK_FALSE(w.witness.has_value());
    CHECK(w.points_checked <= budget);
  }
}

TEST_CASE("a non-global rastrigin local minimum is exposed") {
  auto ras = make_benchmark("rastrigin", 1);
  HypercubeDomain dom(-5.12, 5.12, 1);
  // z = 1 sits in the first side basin with f(z) = 1
  WitnessOutcome w = find_nonzero_witness(*ras, Point{1.0}, dom, 8, 100000);
  REQUIRE(w.status == WitnessStatus::WitnessFound);
  CHECK(ras->value(*w.witness) < 1.0);
}

TEST_CASE("outcomes are monotone in the budget with a stable witness") {
  auto ras = make_benchmark("rastrigin", 2);
  HypercubeDomain dom(-5.12, 5.12, 2);
  Point z{1.0, 1.0};
  WitnessOutcome first = find_nonzero_witness(*ras, z, dom, 12, 50);
  REQUIRE(first.status == WitnessStatus::WitnessFound);
  for (std::uint64_t budget : {100ull, 1000ull, 100000ull}) {
    WitnessOutcome again = find_nonzero_witness(*ras, z, dom, 12, budget);
    CHECK(again.status == WitnessStatus::WitnessFound);
    CHECK(again.witness == first.witness);
    CHECK(again.points_checked == first.points_checked);
  }
}

TEST_CASE("budget exhaustion mid-level reports Unknown with the count") {
  auto sph = make_benchmark("sphere", 1);
  HypercubeDomain dom(-5.0, 5.0, 1);
  // level 1 probes -5, 0, 5 in order; one evaluation cannot reach the zero
  WitnessOutcome w = find_nonzero_witness(*sph, Point{1.0}, dom, 20, 1);
  CHECK(w.status == WitnessStatus::Unknown);
  CHECK(w.points_checked == 1);
}

TEST_CASE("argument validation") {
  auto sph = make_benchmark("sphere", 2);
  HypercubeDomain dom(-5.0, 5.0, 2);
  CHECK_THROWS_AS(h_z(*sph, Point{1.0}, Point{0.0, 0.0}), Error);
  CHECK_THROWS_AS(find_nonzero_witness(*sph, Point{1.0}, dom, 3, 100), Error);
  CHECK_THROWS_AS(find_nonzero_witness(*sph, Point{1.0, 1.0}, dom, 0, 100), Error);
  CHECK_THROWS_AS(find_nonzero_witness(*sph, Point{1.0, 1.0}, dom, 3, 0), Error);
}
