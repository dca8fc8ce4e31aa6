#include "scan.hpp"

#include <cstdio>
#include <limits>
#include <thread>

namespace gopt {

std::uint64_t grid_steps_per_axis(const HypercubeDomain& dom, double m) {
  if (!(m > 0.0) || !std::isfinite(m))
    throw Error(ErrorCode::InvalidArgument, "grid spacing m must be positive");
  double steps = std::floor(dom.side() / m);
  if (steps < 0.0) steps = 0.0;
  return static_cast<std::uint64_t>(steps);
}

std::vector<Point> diagonal_points(const HypercubeDomain& dom, const Point& origin,
                                   double m) {
  require_dim(origin.size(), static_cast<std::size_t>(dom.dim), "diagonal_points");
  std::uint64_t steps = grid_steps_per_axis(dom, m);
  std::vector<Point> pts;
  pts.reserve(steps + 1);
  for (std::uint64_t j = 0; j <= steps; ++j) {
    Point p(origin.size());
    double off = static_cast<double>(j) * m;
    for (std::size_t i = 0; i < origin.size(); ++i) p[i] = origin[i] + off;
    pts.push_back(std::move(p));
  }
  return pts;
}

std::vector<Point> lattice_points(const HypercubeDomain& dom, const Point& origin,
                                  double m, std::uint64_t budget) {
  require_dim(origin.size(), static_cast<std::size_t>(dom.dim), "lattice_points");
  if (budget == 0) throw Error(ErrorCode::InvalidArgument, "lattice budget must be positive");
  std::uint64_t steps = grid_steps_per_axis(dom, m);
  std::uint64_t per_axis = steps + 1;

  // overflow-safe total = per_axis^dim
  double total_est = std::pow(static_cast<double>(per_axis), dom.dim);
  bool overflows = total_est > static_cast<double>(std::numeric_limits<std::uint64_t>::max());
  std::uint64_t total = 0;
  if (!overflows) {
    total = 1;
    for (int i = 0; i < dom.dim; ++i) total *= per_axis;
  }
  if (overflows || total > budget) {
    char msg[256];
    std::snprintf(msg, sizeof(msg),
                  "lattice scan requires %llu^%d = %.6g points, over the budget of "
                  "%llu; use the diagonal scan strategy for this dimension",
                  static_cast<unsigned long long>(per_axis), dom.dim, total_est,
                  static_cast<unsigned long long>(budget));
    throw Error(ErrorCode::BudgetExceeded, msg);
  }

  std::vector<Point> pts;
  pts.reserve(total);
  std::vector<std::uint64_t> idx(origin.size(), 0);
  Point p(origin.size());
  for (std::uint64_t n = 0; n < total; ++n) {
    for (std::size_t i = 0; i < origin.size(); ++i)
      p[i] = origin[i] + static_cast<double>(idx[i]) * m;
    pts.push_back(p);
    // odometer, last axis fastest
    for (std::size_t i = origin.size(); i-- > 0;) {
      if (++idx[i] <= steps) break;
      idx[i] = 0;
    }
  }
  return pts;
}

namespace {

struct Best {
  double value = std::numeric_limits<double>::infinity();
  std::size_t index = 0;
  bool set = false;
};

void scan_range(std::span<const Point> points, const Objective& objective,
                std::size_t begin, std::size_t end, Best& best) {
  for (std::size_t i = begin; i < end; ++i) {
    double f = objective.value(points[i]);
    if (!std::isfinite(f))
      throw Error(ErrorCode::NonFinite,
                  "scan_argmin: non-finite value at point index " + std::to_string(i));
    if (!best.set || f < best.value) {
      best.value = f;
      best.index = i;
      best.set = true;
    }
  }
}

ScanResult to_result(std::span<const Point> points, const Best& best) {
  return {best.index, points[best.index], best.value, points.size()};
}

}  // namespace

ScanResult scan_argmin(std::span<const Point> points, const Objective& objective) {
  if (points.empty())
    throw Error(ErrorCode::InvalidArgument, "scan_argmin: empty point sequence");
  Best best;
  scan_range(points, objective, 0, points.size(), best);
  return to_result(points, best);
}

ScanResult scan_argmin_parallel(std::span<const Point> points,
                                const Objective& objective, unsigned threads) {
  if (points.empty())
    throw Error(ErrorCode::InvalidArgument, "scan_argmin: empty point sequence");
  if (threads <= 1 || points.size() < 2 * threads)
    return scan_argmin(points, objective);

  std::vector<Best> partial(threads);
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> workers;
  std::size_t chunk = (points.size() + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    std::size_t begin = static_cast<std::size_t>(t) * chunk;
    std::size_t end = std::min(points.size(), begin + chunk);
    workers.emplace_back([&, t, begin, end] {
      try {
        scan_range(points, objective, begin, end, partial[t]);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& w : workers) w.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  // chunks are contiguous and ascending, so preferring the lower index on
  // equal values reproduces the serial first-occurrence tie-break
  Best best;
  for (const Best& b : partial) {
    if (!b.set) continue;
    if (!best.set || b.value < best.value ||
        (b.value == best.value && b.index < best.index)) {
      best = b;
    }
  }
  return to_result(points, best);
}

}  // namespace gopt
