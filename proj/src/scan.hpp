#ifndef GOPT_SCAN_HPP
#define GOPT_SCAN_HPP

#include <cstdint>
#include <vector>

#include "core.hpp"
#include "objective.hpp"

namespace gopt {

struct ScanResult {
  std::size_t best_index = 0;
  Point best_point;
  double best_value = 0.0;
  std::size_t points_evaluated = 0;
};

/// Number of grid steps per axis: floor((hi - lo) / m).
std::uint64_t grid_steps_per_axis(const HypercubeDomain& dom, double m);

/// Candidate points along the main diagonal: y_j = origin + j*m on every
/// coordinate, j = 0..floor((hi-lo)/m). A spacing wider than the box yields
/// just the origin.
std::vector<Point> diagonal_points(const HypercubeDomain& dom, const Point& origin,
                                   double m);

/// Full Cartesian grid with spacing m per axis, enumerated lexicographically
/// (last axis fastest). Throws BudgetExceeded if the grid needs more than
/// `budget` points.
std::vector<Point> lattice_points(const HypercubeDomain& dom, const Point& origin,
                                  double m, std::uint64_t budget);

/// Argmin of the objective over an ordered point set. Ties resolve to the
/// lowest index, so the result does not depend on evaluation order.
ScanResult scan_argmin(std::span<const Point> points, const Objective& objective);

/// Same contract as scan_argmin, evaluated on `threads` workers over
/// contiguous index chunks with an index-aware reduction.
ScanResult scan_argmin_parallel(std::span<const Point> points,
                                const Objective& objective, unsigned threads);

}  // namespace gopt

#endif
