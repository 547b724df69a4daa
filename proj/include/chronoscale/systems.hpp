#pragma once

#include <optional>
#include <vector>

#include "chronoscale/contour.hpp"
#include "chronoscale/rational.hpp"
#include "chronoscale/signal.hpp"

namespace chronoscale {

/// Inverse transform of a strictly proper transfer function.
Signal impulse_response(const RationalTransform& h, ScalePtr ts);

struct SimulationSummary {
  std::size_t steps = 0;
  /// Smallest |sum a_k nu^-k| / sum |a_k nu^-k| over the marched steps.
  double min_guard_margin = 1.0;
};

struct Simulation {
  Signal y;
  SimulationSummary summary;
};

/// Marches sum a_k y^(nabla^k) = sum b_k x^(nabla^k) forward from the start
/// of x's support with zero initial state. At each t_n the k-th derivative of
/// y is affine in y(t_n) with slope nu_n^-k, which gives a scalar equation.
///
/// Throws DegenerateDenominator, WindowTooSmall (fewer than max(N, M)
/// instants before the support) or SingularStep.
Simulation simulate(const std::vector<complex>& a, const std::vector<complex>& b, const Signal& x);

/// e_delta(t_m, t0; -s): multiplies F for the signal shifted by t_m - t0.
complex shifted_transform_factor(const TimeScale& ts, std::size_t m, complex s);

/// Phi(n, m, k) = -(1/2 pi i) \oint e_delta(t_m, t0; -s) e_delta(t_k, t0; -s)
///                 e_nabla(t_{n+1}, t0; s) ds
/// over a circle enclosing every 1/g, evaluated in closed form from the
/// expansion at infinity.
double shift_kernel_exact(const TimeScale& ts, std::size_t n, std::size_t m, std::size_t k);

struct InterpolateOptions {
  enum class Method { contour, residue };
  Method method = Method::contour;
  /// Return the stored sample when the target is a grid instant.
  bool grid_shortcut = true;
  std::optional<Contour> contour;
  std::size_t nodes = kDefaultNodes;
};

/// Value of f at t0 + tau for tau in the super time scale. The offset is
/// written tau = t_n - t_m (m as close to t0 as possible, t_{n+1} in the
/// window) and evaluated as the inverse of e_delta(t_m, t0; -s) F(s) at t_n.
///
/// Throws TargetOffSuperScale or ContourInvalid.
complex interpolate(const Signal& f, double tau, const InterpolateOptions& opts = {});

struct ConvolveOptions {
  /// Permit the interpolating path on scales that are not uniform.
  bool general = false;
};

/// (f * g)(t_n) = sum_m mu_m f(t_m) g(t0 + t_n - t_m).
///
/// Uniform scales use the direct double sum; otherwise the interpolating path
/// (opt-in) evaluates the shifted samples with shift_kernel_exact. Throws
/// ScaleMismatch, NotShiftClosed or WindowTooSmall.
Signal convolve(const Signal& f, const Signal& g, const ConvolveOptions& opts = {});

/// g(t0 - (t_n - t0)). Throws ReflectionOffGrid when a support instant has
/// no mirror image in the window.
Signal reflect(const Signal& g);

/// convolve(f, reflect(g)).
Signal correlate(const Signal& f, const Signal& g, const ConvolveOptions& opts = {});

struct ResampleOptions {
  /// Targets outside the super time scale are blended linearly between the
  /// neighbouring super-scale values instead of raising IncompatibleStep.
  bool allow_off_scale = false;
  InterpolateOptions interp;
};

/// Samples f on the uniform grid t0 + n h spanning the window.
Signal resample_uniform(const Signal& f, double h, const ResampleOptions& opts = {});

}  // namespace chronoscale
