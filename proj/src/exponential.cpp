#include "chronoscale/exponential.hpp"

#include <cmath>
#include <sstream>

#include "chronoscale/error.hpp"

namespace chronoscale {

bool is_pole_factor(complex s, double c, double g) noexcept {
  const complex sg = s * g;
  return std::abs(1.0 + c * sg) < kPoleTolerance * (1.0 + std::abs(sg));
}

complex exp(const TimeScale& ts, std::size_t at, std::size_t ref, complex s, Direction kind) {
  if (at >= ts.size() || ref >= ts.size()) {
    throw Error(ErrorCode::IndexOutOfRange, "exponential instant outside window");
  }
  if (at == ref) return 1.0;

  const double c = kind == Direction::nabla ? -1.0 : 1.0;
  const bool forward = at > ref;
  // nabla forward and delta backward invert the product of factors.
  const bool invert = (kind == Direction::nabla) == forward;
  const std::size_t lo = std::min(at, ref);
  const std::size_t hi = std::max(at, ref);

  for (std::size_t j = lo + 1; j <= hi; ++j) {
    if (is_pole_factor(s, c, ts.step(j))) {
      std::ostringstream msg;
      msg << "factor for step " << j << " vanishes at s=" << s;
      throw Error(ErrorCode::PoleHit, msg.str());
    }
  }

  if (hi - lo > kLogSpaceThreshold) {
    complex log_sum{};
    for (std::size_t j = lo + 1; j <= hi; ++j) log_sum += std::log(1.0 + c * s * ts.step(j));
    return std::exp(invert ? -log_sum : log_sum);
  }

  complex prod = 1.0;
  for (std::size_t j = lo + 1; j <= hi; ++j) prod *= 1.0 + c * s * ts.step(j);
  return invert ? 1.0 / prod : prod;
}

HilgerGeometry HilgerGeometry::of(const TimeScale& ts) {
  return HilgerGeometry{ts.min_step(), ts.max_step()};
}

HilgerRegion hilger_classify(const HilgerGeometry& geom, complex s) {
  if (std::abs(1.0 - s * geom.h_min) < 1.0) return HilgerRegion::inside_inner;
  if (std::abs(1.0 - s * geom.h_max) > 1.0) return HilgerRegion::outside_outer;
  return HilgerRegion::intermediate;
}

std::pair<complex, complex> scale_change_check(const TimeScale& ts, std::size_t at, double a,
                                               complex s) {
  const TimeScale scaled = ts.scaled(a);
  return {exp(scaled, at, ts.t0_index(), s, Direction::nabla),
          exp(ts, at, ts.t0_index(), a * s, Direction::nabla)};
}

}  // namespace chronoscale
