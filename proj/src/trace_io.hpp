#ifndef GOPT_TRACE_IO_HPP
#define GOPT_TRACE_IO_HPP

#include <string>
#include <string_view>

#include "optimizer.hpp"

namespace gopt {

/// Shortest decimal form that parses back to the identical double.
std::string format_double(double v);

/// Trace file format: optional leading "# key=value" metadata lines (config,
/// objective, termination), then the column header
///   k,f,grad_norm,scan_index,value_evals,f_z,z_0..z_{d-1},x_0..x_{d-1}
/// and one LF-terminated record per line. All floats use shortest
/// round-trip decimals with '.' as the separator, so
/// parse_trace_csv(serialize_trace_csv(t)) == t bit-exactly.
std::string serialize_trace_csv(const Trace& trace);
Trace parse_trace_csv(std::string_view text);

void save_trace_csv(const Trace& trace, const std::string& path);
Trace load_trace_csv(const std::string& path);

bool operator==(const IterateRecord& a, const IterateRecord& b);
bool operator==(const Trace& a, const Trace& b);

}  // namespace gopt

#endif
