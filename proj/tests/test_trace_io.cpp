#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>

#include "optimizer.hpp"
#include "trace_io.hpp"

using namespace gopt;

namespace {

Trace random_trace(std::uint64_t seed, int dim, std::size_t len) {
  Rng rng(seed);
  Trace tr;
  tr.dim = dim;
  tr.objective_name = "synthetic";
  tr.config.step_size = 0.001;
  tr.config.basin_bound = 0.25;
  tr.config.max_iterations = len;
  tr.config.scan_strategy = ScanStrategy::Lattice;
  tr.config.stop_grad_tol = 1e-7;
  tr.termination = Termination::GradientTolReached;
  for (std::size_t k = 0; k < len; ++k) {
    IterateRecord r;
    r.k = k;
    r.z.resize(dim);
    r.x.resize(dim);
    for (int i = 0; i < dim; ++i) {
      // mix magnitudes, signs, and signed zeros
      r.z[i] = rng.uniform(-1.0, 1.0) * std::pow(10.0, rng.uniform(-300.0, 300.0));
      r.x[i] = rng.next_unit() < 0.05 ? -0.0 : rng.uniform(-5.0, 5.0);
    }
    r.f_x = rng.uniform(-1e6, 1e6);
    r.f_z = rng.uniform(-1.0, 1.0) * 1e-12;
    r.grad_norm = rng.uniform(0.0, 1e3);
    r.scan_best_index = static_cast<std::uint64_t>(rng.uniform(0.0, 1e6));
    r.value_evals_cum = k * 37 + 1;
    tr.records.push_back(std::move(r));
  }
  return tr;
}

}  // namespace

TEST_CASE("serialize/parse round-trips traces bit-exactly") {
  for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
    Trace tr = random_trace(seed, 1 + static_cast<int>(seed), 25);
    Trace back = parse_trace_csv(serialize_trace_csv(tr));
    CHECK(back == tr);
    // and the serialized form is a fixed point
    CHECK(serialize_trace_csv(back) == serialize_trace_csv(tr));
  }
}

TEST_CASE("real run traces survive the file round trip") {
  auto sph = make_benchmark("sphere", 2);
  RunConfig cfg;
  cfg.step_size = 0.001;
  cfg.basin_bound = 0.3;
  cfg.max_iterations = 50;
  Trace tr = run_basin_gd(*sph, sph->default_domain(), cfg);

  std::string path = "trace_io_roundtrip.csv";
  save_trace_csv(tr, path);
  Trace back = load_trace_csv(path);
  CHECK(back == tr);
  std::remove(path.c_str());
}

TEST_CASE("format uses the pinned header prefix, LF endings, and shortest floats") {
  Trace tr = random_trace(7, 2, 3);
  std::string body = serialize_trace_csv(tr);

  CHECK(body.find("k,f,grad_norm,scan_index,value_evals,f_z,z_0,z_1,x_0,x_1\n") !=
        std::string::npos);
  CHECK(body.find('\r') == std::string::npos);

  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(-0.0) == "-0");
  CHECK(format_double(2.0) == "2");
  CHECK(format_double(1e300) == "1e+300");
}

TEST_CASE("malformed inputs raise parse errors") {
  CHECK_THROWS_AS(parse_trace_csv(""), Error);
  CHECK_THROWS_AS(parse_trace_csv("# dim=1\nk,f\n0,1\n"), Error);
  // missing the dim metadata
  CHECK_THROWS_AS(parse_trace_csv("k,f,grad_norm,scan_index,value_evals,f_z,z_0,x_0\n"),
                  Error);
  std::string good_header =
      "# dim=1\n# t=0.1\nk,f,grad_norm,scan_index,value_evals,f_z,z_0,x_0\n";
  CHECK_THROWS_AS(parse_trace_csv(good_header), Error);  // no records
  CHECK_THROWS_AS(parse_trace_csv(good_header + "0,oops,0,0,1,0,0,0\n"), Error);
  CHECK_THROWS_AS(parse_trace_csv(good_header + "0,1,0,0,1,0,0\n"), Error);  // short row
  CHECK_THROWS_AS(parse_trace_csv(good_header + "5,1,0,0,1,0,0,0\n"), Error);  // k gap
  CHECK_THROWS_AS(parse_trace_csv(good_header + "0,inf,0,0,1,0,0,0\n"), Error);
  // missing t metadata
  CHECK_THROWS_AS(
      parse_trace_csv("# dim=1\nk,f,grad_norm,scan_index,value_evals,f_z,z_0,x_0\n"
                      "0,1,0,0,1,0,0,0\n"),
      Error);
}

TEST_CASE("hand-written minimal files parse") {
  std::string text =
      "# dim=1\n"
      "# t=0.1\n"
      "k,f,grad_norm,scan_index,value_evals,f_z,z_0,x_0\n"
      "0,5,1,0,1,5,2,2\n"
      "1,6,1,0,2,5,2,1.9\n";  // f rose above f_z: a planted descent violation
  Trace tr = parse_trace_csv(text);
  REQUIRE(tr.records.size() == 2);
  CHECK(tr.config.step_size == 0.1);
  CHECK(tr.records[1].f_x == 6.0);
}

TEST_CASE("io failures are reported") {
  Trace tr = random_trace(4, 1, 2);
  CHECK_THROWS_AS(save_trace_csv(tr, "/nonexistent-dir/trace.csv"), Error);
  CHECK_THROWS_AS(load_trace_csv("/nonexistent-dir/trace.csv"), Error);
}
