#include "trace_io.hpp"

#include <charconv>
#include <cstring>
#include <fstream>
#include <sstream>

namespace gopt {

namespace {

const char* scan_name(ScanStrategy s) {
  return s == ScanStrategy::Diagonal ? "diagonal" : "lattice";
}

const char* termination_name(Termination t) {
  return t == Termination::BudgetExhausted ? "budget" : "gradtol";
}

[[noreturn]] void parse_fail(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::Parse,
              "trace parse error at line " + std::to_string(line) + ": " + what);
}

double parse_double(std::string_view tok, std::size_t line) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    parse_fail(line, "bad float '" + std::string(tok) + "'");
  if (!std::isfinite(v)) parse_fail(line, "non-finite value '" + std::string(tok) + "'");
  return v;
}

std::uint64_t parse_u64(std::string_view tok, std::size_t line) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    parse_fail(line, "bad integer '" + std::string(tok) + "'");
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

std::string header_for_dim(int dim) {
  std::string h = "k,f,grad_norm,scan_index,value_evals,f_z";
  for (int i = 0; i < dim; ++i) h += ",z_" + std::to_string(i);
  for (int i = 0; i < dim; ++i) h += ",x_" + std::to_string(i);
  return h;
}

}  // namespace

std::string format_double(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, ptr);
}

std::string serialize_trace_csv(const Trace& trace) {
  if (trace.records.empty())
    throw Error(ErrorCode::InvalidArgument, "cannot serialize an empty trace");

  std::string out;
  out += "# gopt trace v1\n";
  out += "# objective=" + trace.objective_name + "\n";
  out += "# dim=" + std::to_string(trace.dim) + "\n";
  out += "# t=" + format_double(trace.config.step_size) + "\n";
  out += "# m=" + format_double(trace.config.basin_bound) + "\n";
  out += "# max_iterations=" + std::to_string(trace.config.max_iterations) + "\n";
  out += std::string("# scan=") + scan_name(trace.config.scan_strategy) + "\n";
  out += "# lattice_point_budget=" + std::to_string(trace.config.lattice_point_budget) + "\n";
  out += std::string("# clamp=") + (trace.config.clamp_to_domain ? "1" : "0") + "\n";
  out += "# stop_grad_tol=" + format_double(trace.config.stop_grad_tol) + "\n";
  out += std::string("# termination=") + termination_name(trace.termination) + "\n";
  out += header_for_dim(trace.dim) + "\n";

  for (const IterateRecord& r : trace.records) {
    out += std::to_string(r.k);
    out += ',';
    out += format_double(r.f_x);
    out += ',';
    out += format_double(r.grad_norm);
    out += ',';
    out += std::to_string(r.scan_best_index);
    out += ',';
    out += std::to_string(r.value_evals_cum);
    out += ',';
    out += format_double(r.f_z);
    for (double c : r.z) {
      out += ',';
      out += format_double(c);
    }
    for (double c : r.x) {
      out += ',';
      out += format_double(c);
    }
    out += '\n';
  }
  return out;
}

Trace parse_trace_csv(std::string_view text) {
  Trace tr;
  tr.dim = 0;

  std::size_t lineno = 0;
  std::size_t pos = 0;
  bool header_seen = false;
  bool have_t = false;

  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = eol == std::string_view::npos
                                ? text.substr(pos)
                                : text.substr(pos, eol - pos);
    pos = eol == std::string_view::npos ? text.size() : eol + 1;
    ++lineno;
    if (line.empty()) continue;

    if (line[0] == '#') {
      if (header_seen) parse_fail(lineno, "metadata after header");
      std::string_view body = line.substr(1);
      while (!body.empty() && body.front() == ' ') body.remove_prefix(1);
      std::size_t eq = body.find('=');
      if (eq == std::string_view::npos) continue;  // banner line
      std::string_view key = body.substr(0, eq);
      std::string_view val = body.substr(eq + 1);
      if (key == "objective") tr.objective_name = std::string(val);
      else if (key == "dim") tr.dim = static_cast<int>(parse_u64(val, lineno));
      else if (key == "t") { tr.config.step_size = parse_double(val, lineno); have_t = true; }
      else if (key == "m") tr.config.basin_bound = parse_double(val, lineno);
      else if (key == "max_iterations") tr.config.max_iterations = parse_u64(val, lineno);
      else if (key == "scan")
        tr.config.scan_strategy =
            val == "lattice" ? ScanStrategy::Lattice : ScanStrategy::Diagonal;
      else if (key == "lattice_point_budget") tr.config.lattice_point_budget = parse_u64(val, lineno);
      else if (key == "clamp") tr.config.clamp_to_domain = (val == "1");
      else if (key == "stop_grad_tol") tr.config.stop_grad_tol = parse_double(val, lineno);
      else if (key == "termination")
        tr.termination = val == "gradtol" ? Termination::GradientTolReached
                                          : Termination::BudgetExhausted;
      continue;
    }

    if (!header_seen) {
      if (tr.dim < 1) parse_fail(lineno, "missing '# dim=' metadata before header");
      std::string expected = header_for_dim(tr.dim);
      if (line != expected)
        parse_fail(lineno, "bad header, expected '" + expected + "'");
      header_seen = true;
      continue;
    }

    std::vector<std::string_view> tok = split(line, ',');
    std::size_t want = 6 + 2 * static_cast<std::size_t>(tr.dim);
    if (tok.size() != want)
      parse_fail(lineno, "expected " + std::to_string(want) + " fields, got " +
                             std::to_string(tok.size()));

    IterateRecord r;
    r.k = parse_u64(tok[0], lineno);
    r.f_x = parse_double(tok[1], lineno);
    r.grad_norm = parse_double(tok[2], lineno);
    r.scan_best_index = parse_u64(tok[3], lineno);
    r.value_evals_cum = parse_u64(tok[4], lineno);
    r.f_z = parse_double(tok[5], lineno);
    r.z.resize(tr.dim);
    r.x.resize(tr.dim);
    for (int i = 0; i < tr.dim; ++i) r.z[i] = parse_double(tok[6 + i], lineno);
    for (int i = 0; i < tr.dim; ++i) r.x[i] = parse_double(tok[6 + tr.dim + i], lineno);

    std::uint64_t expected_k = tr.records.empty() ? 0 : tr.records.back().k + 1;
    if (r.k != expected_k)
      parse_fail(lineno, "record index " + std::to_string(r.k) + " out of order");
    tr.records.push_back(std::move(r));
  }

  if (!header_seen) throw Error(ErrorCode::Parse, "trace has no header line");
  if (tr.records.empty()) throw Error(ErrorCode::Parse, "trace has no records");
  if (!have_t) throw Error(ErrorCode::Parse, "trace metadata is missing '# t='");
  return tr;
}

void save_trace_csv(const Trace& trace, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::Io, "cannot open for writing: " + path);
  std::string body = serialize_trace_csv(trace);
  f.write(body.data(), static_cast<std::streamsize>(body.size()));
  if (!f) throw Error(ErrorCode::Io, "write failed: " + path);
}

Trace load_trace_csv(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::Io, "cannot open: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_trace_csv(ss.str());
}

bool operator==(const IterateRecord& a, const IterateRecord& b) {
  return a.k == b.k && a.z == b.z && a.x == b.x && a.f_x == b.f_x && a.f_z == b.f_z &&
         a.grad_norm == b.grad_norm && a.scan_best_index == b.scan_best_index &&
         a.value_evals_cum == b.value_evals_cum;
}

bool operator==(const Trace& a, const Trace& b) {
  return a.records == b.records && a.objective_name == b.objective_name &&
         a.dim == b.dim && a.termination == b.termination &&
         a.config.step_size == b.config.step_size &&
         a.config.basin_bound == b.config.basin_bound &&
         a.config.max_iterations == b.config.max_iterations &&
         a.config.scan_strategy == b.config.scan_strategy &&
         a.config.lattice_point_budget == b.config.lattice_point_budget &&
         a.config.clamp_to_domain == b.config.clamp_to_domain &&
         a.config.stop_grad_tol == b.config.stop_grad_tol;
}

}  // namespace gopt
