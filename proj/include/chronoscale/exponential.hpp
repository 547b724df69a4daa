#pragma once

#include <utility>

#include "chronoscale/timescale.hpp"

namespace chronoscale {

/// Products with more factors than this are accumulated as a sum of complex
/// logarithms.
inline constexpr std::size_t kLogSpaceThreshold = 64;

/// |factor| below kPoleTolerance * (1 + |s*g|) counts as a pole.
inline constexpr double kPoleTolerance = 1e-14;

/// Generalized exponential between instants `at` and `ref`:
///
///   nabla, at > ref:  prod (1 - s*g)^-1      at < ref:  prod (1 - s*g)
///   delta, at > ref:  prod (1 + s*g)         at < ref:  prod (1 + s*g)^-1
///
/// where g runs over the steps between the two instants. Returns 1 when
/// at == ref. Throws PoleHit if a factor vanishes.
complex exp(const TimeScale& ts, std::size_t at, std::size_t ref, complex s, Direction kind);

/// True when 1 + c*s*g is numerically zero.
bool is_pole_factor(complex s, double c, double g) noexcept;

enum class HilgerRegion { inside_inner, outside_outer, intermediate };

struct HilgerGeometry {
  double h_min;
  double h_max;

  /// Smallest and largest step of the window.
  static HilgerGeometry of(const TimeScale& ts);
};

/// inside_inner iff |1 - s*h_min| < 1; outside_outer iff |1 - s*h_max| > 1
/// and not inside_inner; intermediate otherwise.
HilgerRegion hilger_classify(const HilgerGeometry& geom, complex s);

/// (nabla exp on a*T at instant `at` with parameter s,
///  nabla exp on T at `at` with parameter a*s), both relative to t0.
std::pair<complex, complex> scale_change_check(const TimeScale& ts, std::size_t at, double a,
                                               complex s);

}  // namespace chronoscale
