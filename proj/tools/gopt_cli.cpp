// gopt command line: run experiments, verify traces against the convergence
// checks, search for global-minimality witnesses, and compare algorithms.
// Talks to the library exclusively through the C API in gopt/gopt.h.

#include <charconv>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gopt/gopt.h"

namespace {

using nlohmann::json;

enum ExitCode : int {
  kExitOk = 0,
  kExitVerifyFailed = 1,
  kExitConfig = 2,
  kExitDivergence = 3,
};

int exit_code_for(gopt_status s) {
  switch (s) {
    case GOPT_OK: return kExitOk;
    case GOPT_ERR_DIVERGED:
    case GOPT_ERR_NON_FINITE: return kExitDivergence;
    default: return kExitConfig;
  }
}

[[noreturn]] void die(int code, const std::string& msg) {
  std::fprintf(stderr, "gopt: %s\n", msg.c_str());
  std::exit(code);
}

[[noreturn]] void die_status(gopt_status s) { die(exit_code_for(s), gopt_last_error()); }

std::vector<double> parse_point(const std::string& text) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string_view tok(text.data() + start,
                         (comma == std::string::npos ? text.size() : comma) - start);
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
      die(kExitConfig, "bad coordinate list '" + text + "'");
    out.push_back(v);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

struct ObjectivePtr {
  gopt_objective* p = nullptr;
  ~ObjectivePtr() { gopt_objective_free(p); }
};

struct TracePtr {
  gopt_trace* p = nullptr;
  ~TracePtr() { gopt_trace_free(p); }
};

int default_dim(const std::string& name) {
  if (name == "ackley" || name == "beale" || name == "booth") return 2;
  return 20;  // experiment default for rastrigin/sphere/rosenbrock
}

gopt_objective* open_objective(const std::string& name, int dim) {
  gopt_objective* obj = nullptr;
  gopt_status s = gopt_objective_create(name.c_str(), dim, &obj);
  if (s != GOPT_OK) die_status(s);
  return obj;
}

// Shared experiment options; JSON config supplies values for flags the user
// did not pass, flags always win.
struct ExperimentArgs {
  std::string objective;
  int dim = -1;
  std::string algo = "basin";
  double t = -1.0;
  double m = -1.0;
  std::uint64_t iters = 10000;
  std::string scan = "diagonal";
  std::uint64_t budget = 1000000;
  std::uint64_t seed = 0;
  int starts = 10;
  double gtol = 0.0;
  std::string x0_text;
  std::string domain_text;
  std::string out = "trace.csv";
  std::string config_path;
};

void add_experiment_flags(CLI::App* cmd, ExperimentArgs& a,
                          std::vector<std::pair<CLI::Option*, std::string>>& opts) {
  auto track = [&](CLI::Option* o, const char* key) { opts.emplace_back(o, key); };
  track(cmd->add_option("--objective", a.objective, "benchmark name"), "objective");
  track(cmd->add_option("--dim", a.dim, "dimension (default: 2 or 20 by benchmark)"),
        "dim");
  track(cmd->add_option("--algo", a.algo, "basin|plain|multistart"), "algo");
  track(cmd->add_option("--t", a.t, "step size (default: reference value)"), "t");
  track(cmd->add_option("--m", a.m, "basin lower bound (default: reference value)"),
        "m");
  track(cmd->add_option("--iters", a.iters, "iteration budget"), "iters");
  track(cmd->add_option("--scan", a.scan, "diagonal|lattice"), "scan");
  track(cmd->add_option("--budget", a.budget, "lattice point budget"), "budget");
  track(cmd->add_option("--seed", a.seed, "seed for multistart draws"), "seed");
  track(cmd->add_option("--starts", a.starts, "multistart count"), "starts");
  track(cmd->add_option("--gtol", a.gtol, "stop once ||grad|| <= gtol"), "gtol");
  track(cmd->add_option("--x0", a.x0_text, "start point for plain gd, e.g. 0,0"),
        "x0");
  track(cmd->add_option("--domain", a.domain_text, "override box as a,b"), "domain");
  track(cmd->add_option("--out", a.out, "trace output path"), "out");
  cmd->add_option("--config", a.config_path, "JSON file with the same keys");
}

void merge_json_config(ExperimentArgs& a,
                       const std::vector<std::pair<CLI::Option*, std::string>>& opts) {
  if (a.config_path.empty()) return;
  std::ifstream f(a.config_path);
  if (!f) die(kExitConfig, "cannot open config file " + a.config_path);
  json j;
  try {
    f >> j;
  } catch (const std::exception& e) {
    die(kExitConfig, std::string("bad JSON config: ") + e.what());
  }
  auto fetch = [&](const std::string& key, auto& slot) {
    using T = std::decay_t<decltype(slot)>;
    try {
      slot = j.at(key).get<T>();
    } catch (const std::exception& e) {
      die(kExitConfig, "config key '" + key + "': " + e.what());
    }
  };
  for (const auto& [opt, key] : opts) {
    if (opt->count() > 0 || !j.contains(key)) continue;
    if (key == "objective") fetch(key, a.objective);
    else if (key == "dim") fetch(key, a.dim);
    else if (key == "algo") fetch(key, a.algo);
    else if (key == "t") fetch(key, a.t);
    else if (key == "m") fetch(key, a.m);
    else if (key == "iters") fetch(key, a.iters);
    else if (key == "scan") fetch(key, a.scan);
    else if (key == "budget") fetch(key, a.budget);
    else if (key == "seed") fetch(key, a.seed);
    else if (key == "starts") fetch(key, a.starts);
    else if (key == "gtol") fetch(key, a.gtol);
    else if (key == "out") fetch(key, a.out);
    else if (key == "x0") {
      std::vector<double> v;
      fetch(key, v);
      a.x0_text.clear();
      for (std::size_t i = 0; i < v.size(); ++i) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.17g", v[i]);
        a.x0_text += (i ? "," : "") + std::string(buf);
      }
    } else if (key == "domain") {
      std::vector<double> v;
      fetch(key, v);
      if (v.size() != 2) die(kExitConfig, "config key 'domain' must be [a, b]");
      char buf[80];
      std::snprintf(buf, sizeof(buf), "%.17g,%.17g", v[0], v[1]);
      a.domain_text = buf;
    }
  }
}

struct ResolvedExperiment {
  ObjectivePtr obj;
  double lo = 0.0, hi = 0.0;
  double t = 0.0, m = 0.0;
};

ResolvedExperiment resolve(ExperimentArgs& a) {
  if (a.objective.empty()) die(kExitConfig, "--objective is required");
  ResolvedExperiment r;
  int dim = a.dim > 0 ? a.dim : default_dim(a.objective);
  r.obj.p = open_objective(a.objective, dim);
  gopt_objective_default_domain(r.obj.p, &r.lo, &r.hi);
  if (!a.domain_text.empty()) {
    std::vector<double> d = parse_point(a.domain_text);
    if (d.size() != 2 || !(d[0] < d[1])) die(kExitConfig, "--domain expects a,b with a < b");
    r.lo = d[0];
    r.hi = d[1];
  }
  double pt = 0.0, pm = 0.0;
  gopt_paper_params(a.objective.c_str(), &pt, &pm);
  r.t = a.t > 0.0 ? a.t : pt;
  r.m = a.m > 0.0 ? a.m : pm;
  return r;
}

gopt_status run_algo(const ExperimentArgs& a, const ResolvedExperiment& r,
                     gopt_trace** trace) {
  if (a.algo == "basin") {
    gopt_run_config cfg;
    gopt_run_config_init(&cfg);
    cfg.step_size = r.t;
    cfg.basin_bound = r.m;
    cfg.max_iterations = a.iters;
    cfg.scan_strategy = a.scan == "lattice" ? GOPT_SCAN_LATTICE : GOPT_SCAN_DIAGONAL;
    cfg.lattice_point_budget = a.budget;
    cfg.stop_grad_tol = a.gtol;
    return gopt_run_basin(r.obj.p, r.lo, r.hi, &cfg, trace);
  }
  if (a.algo == "plain") {
    int dim = gopt_objective_dim(r.obj.p);
    std::vector<double> x0(dim, 0.5 * (r.lo + r.hi));
    if (!a.x0_text.empty()) {
      x0 = parse_point(a.x0_text);
      if (static_cast<int>(x0.size()) != dim)
        die(kExitConfig, "--x0 must have " + std::to_string(dim) + " coordinates");
    }
    return gopt_run_plain(r.obj.p, x0.data(), x0.size(), r.t, a.iters, a.gtol, trace);
  }
  if (a.algo == "multistart")
    return gopt_run_multistart(r.obj.p, r.lo, r.hi, a.starts, r.t, a.iters, a.seed,
                               trace);
  die(kExitConfig, "unknown --algo '" + a.algo + "' (basin|plain|multistart)");
}

void print_summary(const gopt_trace* trace, const gopt_objective* obj) {
  uint64_t len = gopt_trace_length(trace);
  gopt_record_view last;
  gopt_trace_record(trace, len - 1, &last);
  uint64_t ve = 0, ge = 0;
  gopt_objective_eval_counts(obj, &ve, &ge);
  std::printf("final_f=%.17g iterations=%llu value_evals=%llu gradient_evals=%llu "
              "termination=%s\n",
              last.f, static_cast<unsigned long long>(len - 1),
              static_cast<unsigned long long>(ve), static_cast<unsigned long long>(ge),
              gopt_trace_termination(trace) == GOPT_TERM_GRAD_TOL ? "gradtol"
                                                                  : "budget");
}

// Advisory: the descent guarantee needs t <= 1/L; sample a lower bound for L
// on a scratch objective so the run's own counters stay untouched.
void lipschitz_note(const ExperimentArgs& a, const ResolvedExperiment& r) {
  ObjectivePtr scratch;
  scratch.p = open_objective(a.objective, gopt_objective_dim(r.obj.p));
  double l_hat = 0.0;
  if (gopt_estimate_lipschitz(scratch.p, r.lo, r.hi, 2000, 1, &l_hat) != GOPT_OK)
    return;
  if (l_hat <= 0.0) {
    std::fprintf(stderr, "gopt: gradient looks constant (L_hat = 0); any step is stable\n");
    return;
  }
  std::fprintf(stderr, "gopt: L_hat=%.6g, stable step bound 1/L_hat=%.6g, t=%.6g%s\n",
               l_hat, 1.0 / l_hat, r.t,
               r.t <= 1.0 / l_hat
                   ? ""
                   : " -- t exceeds 1/L_hat, the descent inequality is not guaranteed");
}

int cmd_run(ExperimentArgs& a, bool check_lipschitz) {
  ResolvedExperiment r = resolve(a);
  if (check_lipschitz) lipschitz_note(a, r);
  TracePtr trace;
  gopt_status s = run_algo(a, r, &trace.p);
  if (s != GOPT_OK) {
    std::fprintf(stderr, "gopt: %s\n", gopt_last_error());
    if (trace.p) {
      // keep the partial trace for diagnosis
      if (gopt_trace_save_csv(trace.p, a.out.c_str()) == GOPT_OK)
        std::fprintf(stderr, "gopt: partial trace written to %s\n", a.out.c_str());
    }
    return exit_code_for(s);
  }
  gopt_status ws = gopt_trace_save_csv(trace.p, a.out.c_str());
  if (ws != GOPT_OK) die_status(ws);
  print_summary(trace.p, r.obj.p);
  return kExitOk;
}

int cmd_verify(const std::string& trace_path, const std::string& x_star_text,
               double radius, double f_star, bool has_x_star) {
  TracePtr trace;
  gopt_status s = gopt_trace_load_csv(trace_path.c_str(), &trace.p);
  if (s != GOPT_OK) die_status(s);

  bool all_pass = true;
  uint64_t len = gopt_trace_length(trace.p);

  size_t violations = 0;
  s = gopt_verify_descent(trace.p, nullptr, 0, &violations);
  if (s != GOPT_OK) die_status(s);
  std::printf("descent: %s (%zu violations / %llu steps)\n",
              violations == 0 ? "pass" : "FAIL", violations,
              static_cast<unsigned long long>(len - 1));
  all_pass = all_pass && violations == 0;

  if (has_x_star) {
    std::vector<double> star = parse_point(x_star_text);
    if (static_cast<int>(star.size()) != gopt_trace_dim(trace.p))
      die(kExitConfig, "--x-star dimension does not match the trace");
    int found = 0;
    uint64_t entry = 0;
    s = gopt_detect_ball_entry(trace.p, star.data(), star.size(), radius, &found,
                               &entry);
    if (s != GOPT_OK) die_status(s);
    if (!found) {
      std::printf("ball_entry: FAIL (never settles within r=%.17g)\n", radius);
      std::printf("rate_bound: skipped\n");
      all_pass = false;
    } else {
      std::printf("ball_entry: M=%llu (r=%.17g)\n",
                  static_cast<unsigned long long>(entry), radius);
      if (entry + 1 >= len) {
        // nothing after entry: zero checkable inequalities
        std::printf("rate_bound: pass (vacuous, entry at final record)\n");
      } else {
        gopt_rate_report* report = nullptr;
        s = gopt_verify_rate(trace.p, star.data(), star.size(), f_star, entry,
                             &report);
        if (s != GOPT_OK) die_status(s);
        size_t rv = gopt_rate_report_violations(report);
        bool ok = gopt_rate_report_passed(report) == 1;
        std::printf("rate_bound: %s (%zu violations, M=%llu)\n", ok ? "pass" : "FAIL",
                    rv, static_cast<unsigned long long>(entry));
        if (!ok) {
          uint64_t k;
          double lhs, rhs;
          gopt_rate_report_violation(report, 0, &k, &lhs, &rhs);
          std::printf("  first violation: k=%llu lhs=%.17g rhs=%.17g\n",
                      static_cast<unsigned long long>(k), lhs, rhs);
        }
        gopt_rate_report_free(report);
        all_pass = all_pass && ok;
      }
    }
  }
  std::printf("verify: %s\n", all_pass ? "pass" : "FAIL");
  return all_pass ? kExitOk : kExitVerifyFailed;
}

int cmd_witness(const std::string& objective, int dim, const std::string& z_text,
                const std::string& domain_text, int levels, std::uint64_t budget) {
  if (objective.empty()) die(kExitConfig, "--objective is required");
  if (z_text.empty()) die(kExitConfig, "--z is required");
  int d = dim > 0 ? dim : default_dim(objective);
  std::vector<double> z = parse_point(z_text);
  if (static_cast<int>(z.size()) != d)
    die(kExitConfig, "--z must have " + std::to_string(d) + " coordinates");

  ObjectivePtr obj;
  obj.p = open_objective(objective, d);
  double lo, hi;
  gopt_objective_default_domain(obj.p, &lo, &hi);
  if (!domain_text.empty()) {
    std::vector<double> dd = parse_point(domain_text);
    if (dd.size() != 2 || !(dd[0] < dd[1])) die(kExitConfig, "--domain expects a,b");
    lo = dd[0];
    hi = dd[1];
  }

  std::vector<double> witness(d, 0.0);
  int found = 0;
  double h = 0.0;
  uint64_t checked = 0;
  gopt_status s = gopt_find_witness(obj.p, z.data(), z.size(), lo, hi, levels, budget,
                                    &found, witness.data(), &h, &checked);
  if (s != GOPT_OK) die_status(s);

  if (found) {
    double fz, fw;
    gopt_objective_value(obj.p, z.data(), z.size(), &fz);
    gopt_objective_value(obj.p, witness.data(), witness.size(), &fw);
    std::printf("witness: found (points_checked=%llu)\n",
                static_cast<unsigned long long>(checked));
    std::printf("  point:");
    for (double c : witness) std::printf(" %.17g", c);
    std::printf("\n  f(z)=%.17g f(witness)=%.17g h=%.17g\n", fz, fw, h);
  } else {
    std::printf("witness: unknown (points_checked=%llu)\n",
                static_cast<unsigned long long>(checked));
    std::printf("  no point beat f(z); this never certifies that z is global\n");
  }
  return kExitOk;
}

int cmd_compare(ExperimentArgs& a) {
  std::printf("algorithm,final_f,iterations,value_evals,gradient_evals,wall_ms\n");
  bool failed = false;
  for (const char* algo : {"basin", "multistart"}) {
    ExperimentArgs sub = a;
    sub.algo = algo;
    ResolvedExperiment r = resolve(sub);
    TracePtr trace;
    auto start = std::chrono::steady_clock::now();
    gopt_status s = run_algo(sub, r, &trace.p);
    auto wall = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - start)
                    .count();
    if (s != GOPT_OK) {
      std::printf("%s,error,,,,\n", algo);
      std::fprintf(stderr, "gopt: %s: %s\n", algo, gopt_last_error());
      failed = true;
      continue;
    }
    uint64_t len = gopt_trace_length(trace.p);
    gopt_record_view last;
    gopt_trace_record(trace.p, len - 1, &last);
    uint64_t ve = 0, ge = 0;
    gopt_objective_eval_counts(r.obj.p, &ve, &ge);
    std::printf("%s,%.17g,%llu,%llu,%llu,%.3f\n", algo, last.f,
                static_cast<unsigned long long>(len - 1),
                static_cast<unsigned long long>(ve),
                static_cast<unsigned long long>(ge), wall);
  }
  return failed ? kExitDivergence : kExitOk;
}

int cmd_grad_check(const std::string& objective, int dim, int samples,
                   std::uint64_t seed, double h) {
  if (objective.empty()) die(kExitConfig, "--objective is required");
  int d = dim > 0 ? dim : default_dim(objective);
  ObjectivePtr obj;
  obj.p = open_objective(objective, d);
  double lo, hi;
  gopt_objective_default_domain(obj.p, &lo, &hi);
  double err = 0.0;
  gopt_status s = gopt_gradient_max_fd_error(obj.p, lo, hi, samples, seed, h, &err);
  if (s != GOPT_OK) die_status(s);
  bool ok = err <= 1e-6;
  std::printf("grad_check: %s (max_error=%.3e over %d points, h=%.1e)\n",
              ok ? "pass" : "FAIL", err, samples, h);
  return ok ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gopt - basin-aware global optimization toolkit"};
  app.require_subcommand(1);

  ExperimentArgs run_args;
  std::vector<std::pair<CLI::Option*, std::string>> run_opts;
  bool run_check_lipschitz = false;
  CLI::App* run = app.add_subcommand("run", "run an optimizer and write a trace CSV");
  add_experiment_flags(run, run_args, run_opts);
  run->add_flag("--check-lipschitz", run_check_lipschitz,
                "report a sampled L bound and whether t <= 1/L_hat");

  std::string verify_trace, verify_star;
  double verify_r = 0.5, verify_fstar = 0.0;
  CLI::App* verify = app.add_subcommand("verify", "check a trace against the theory");
  verify->add_option("trace", verify_trace, "trace CSV file")->required();
  CLI::Option* star_opt =
      verify->add_option("--x-star", verify_star, "known optimum, e.g. 0,0");
  verify->add_option("--r", verify_r, "ball radius for entry detection");
  verify->add_option("--f-star", verify_fstar, "optimal value (default 0)");

  std::string wit_obj, wit_z, wit_domain;
  int wit_dim = -1, wit_levels = 30;
  std::uint64_t wit_budget = 100000;
  CLI::App* witness =
      app.add_subcommand("witness", "search for a point certifying z is not global");
  witness->add_option("--objective", wit_obj, "benchmark name");
  witness->add_option("--dim", wit_dim, "dimension");
  witness->add_option("--z", wit_z, "candidate point, e.g. 1.0,2.0");
  witness->add_option("--domain", wit_domain, "override box as a,b");
  witness->add_option("--levels", wit_levels, "dyadic refinement levels");
  witness->add_option("--budget", wit_budget, "evaluation budget");

  ExperimentArgs cmp_args;
  std::vector<std::pair<CLI::Option*, std::string>> cmp_opts;
  CLI::App* compare =
      app.add_subcommand("compare", "basin vs multistart on one objective");
  add_experiment_flags(compare, cmp_args, cmp_opts);

  std::string gc_obj;
  int gc_dim = -1, gc_samples = 100;
  std::uint64_t gc_seed = 0;
  double gc_h = 1e-6;
  CLI::App* grad_check =
      app.add_subcommand("grad-check", "analytic gradient vs central differences");
  grad_check->add_option("--objective", gc_obj, "benchmark name");
  grad_check->add_option("--dim", gc_dim, "dimension");
  grad_check->add_option("--samples", gc_samples, "sample count");
  grad_check->add_option("--seed", gc_seed, "sampling seed");
  grad_check->add_option("--h-step", gc_h, "difference step");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (run->parsed()) {
      merge_json_config(run_args, run_opts);
      return cmd_run(run_args, run_check_lipschitz);
    }
    if (verify->parsed())
      return cmd_verify(verify_trace, verify_star, verify_r, verify_fstar,
                        star_opt->count() > 0);
    if (witness->parsed())
      return cmd_witness(wit_obj, wit_dim, wit_z, wit_domain, wit_levels, wit_budget);
    if (compare->parsed()) {
      merge_json_config(cmp_args, cmp_opts);
      return cmd_compare(cmp_args);
    }
    if (grad_check->parsed())
      return cmd_grad_check(gc_obj, gc_dim, gc_samples, gc_seed, gc_h);
  } catch (const std::exception& e) {
    die(kExitConfig, e.what());
  }
  return kExitConfig;
}
