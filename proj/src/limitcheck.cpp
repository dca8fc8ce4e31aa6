#include "limitcheck.hpp"

namespace gopt {

double h_z(const Objective& objective, const Point& z, const Point& x) {
  double fz = objective.value(z);
  double fx = objective.value(x);
  return std::min(0.0, fx - fz);
}

WitnessOutcome find_nonzero_witness(const Objective& objective, const Point& z,
                                    const HypercubeDomain& dom, int levels,
                                    std::uint64_t budget) {
  require_dim(z.size(), static_cast<std::size_t>(dom.dim), "find_nonzero_witness");
  if (levels < 1) throw Error(ErrorCode::InvalidArgument, "levels must be >= 1");
  if (budget == 0) throw Error(ErrorCode::InvalidArgument, "budget must be positive");

  const double fz = objective.value(z);
  const std::size_t d = z.size();

  WitnessOutcome out;
  for (int level = 1; level <= levels; ++level) {
    // spacing is an exact power-of-two fraction of the side, so lattice
    // coordinates are reproducible across levels
    const std::uint64_t steps = std::uint64_t{1} << level;
    const double spacing = dom.side() / static_cast<double>(steps);

    std::vector<std::uint64_t> idx(d, 0);
    Point p(d);
    while (true) {
      for (std::size_t i = 0; i < d; ++i)
        p[i] = dom.lo + static_cast<double>(idx[i]) * spacing;
      double fx = objective.value(p);
      ++out.points_checked;
      if (fx - fz < -kWitnessThreshold) {
        out.status = WitnessStatus::WitnessFound;
        out.witness = p;
        out.h_value = fx - fz;
        return out;
      }
      if (out.points_checked >= budget) return out;

      // odometer, last axis fastest
      std::size_t axis = d;
      while (axis-- > 0) {
        if (++idx[axis] <= steps) break;
        idx[axis] = 0;
        if (axis == 0) goto level_done;
      }
    }
  level_done:;
  }
  return out;
}

}  // namespace gopt
