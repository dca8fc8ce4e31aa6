#include "core.hpp"

namespace gopt {

bool contains(const HypercubeDomain& dom, const Point& p) {
  require_dim(p.size(), static_cast<std::size_t>(dom.dim), "contains");
  for (double x : p) {
    if (!std::isfinite(x)) throw Error(ErrorCode::NonFinite, "contains: non-finite coordinate");
    if (x < dom.lo || x > dom.hi) return false;
  }
  return true;
}

Point clamp_to_domain(const Point& p, const HypercubeDomain& dom) {
  require_dim(p.size(), static_cast<std::size_t>(dom.dim), "clamp_to_domain");
  Point out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!std::isfinite(p[i]))
      throw Error(ErrorCode::NonFinite, "clamp_to_domain: non-finite coordinate");
    out[i] = std::min(dom.hi, std::max(dom.lo, p[i]));
  }
  return out;
}

}  // namespace gopt
