#ifndef GOPT_LIMITCHECK_HPP
#define GOPT_LIMITCHECK_HPP

#include <cstdint>
#include <optional>

#include "core.hpp"
#include "objective.hpp"

namespace gopt {

/// Certification threshold: a probe only counts as a witness when it beats
/// f(z) by more than this, so rounding noise can never certify.
inline constexpr double kWitnessThreshold = 1e-12;

/// The gadget h_z(x) = min{0, f(x) - f(z)}: identically zero if and only if
/// z is a global minimizer, and strictly negative exactly at points that
/// beat z.
double h_z(const Objective& objective, const Point& z, const Point& x);

enum class WitnessStatus { WitnessFound, Unknown };

/// One-sided search outcome. WitnessFound carries an explicit certificate
/// (a point with f(witness) < f(z)); Unknown is the only other answer - the
/// search never claims z is a global minimum.
struct WitnessOutcome {
  WitnessStatus status = WitnessStatus::Unknown;
  std::optional<Point> witness;
  std::optional<double> h_value;
  std::uint64_t points_checked = 0;
};

/// Evaluates h_z over dyadic lattices of spacing (hi-lo)/2^level for
/// level = 1..levels, lexicographic order within a level, halting at the
/// first point with h_z < -threshold or after `budget` evaluations.
WitnessOutcome find_nonzero_witness(const Objective& objective, const Point& z,
                                    const HypercubeDomain& dom, int levels,
                                    std::uint64_t budget);

}  // namespace gopt

#endif
