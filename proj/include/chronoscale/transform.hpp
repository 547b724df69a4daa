#pragma once

#include <functional>
#include <span>
#include <vector>

#include "chronoscale/contour.hpp"
#include "chronoscale/rational.hpp"
#include "chronoscale/signal.hpp"

namespace chronoscale {

/// Nabla transform: F(s) = sum_n mu_n f(t_n) e_delta(t_n, t0; -s).
/// Delta transform: F(s) = sum_n nu_n f(t_n) e_nabla(t_n, t0; -s).
///
/// Exact finite sums over the support. Throws SupportTouchesBoundary when the
/// weight at a support index is undefined (last index for nabla, index 0 for
/// delta) and PoleHit when a needed exponential factor vanishes.
complex direct_transform(const Signal& f, complex s, Direction kind);

/// Same sum at every s, evaluated lane-parallel.
std::vector<complex> direct_transform(const Signal& f, std::span<const complex> s, Direction kind);

/// Spike 1/mu(t0) at t0. Throws BoundaryIndex when t0 is the last instant.
Signal impulse(ScalePtr ts);

enum class StepFlavor { causal, anticausal };

/// causal: 1 for t >= t0. anticausal: -1 for t < t0.
Signal unit_step(ScalePtr ts, StepFlavor flavor);

/// Inverse nabla transform of a strictly proper rational by partial
/// fractions. A pole p of multiplicity m contributes, for j = 1..m,
///   causal:      c_j K_j(n)   for t_n >= t0
///   anticausal: -c_j K_j(n)   for t_{n+1} <= t0
/// where K_j = (1/(j-1)!) d^(j-1)/dp^(j-1) e_nabla(t_{n+1}, t0; p).
/// The last index has no successor and is returned as zero.
///
/// Throws ImproperRational, UntaggedPole or PoleOnScale.
Signal invert_rational(const RationalTransform& h, ScalePtr ts);

using TransformFn = std::function<complex(complex)>;

/// Poles of the transform that the contour must enclose or exclude, in
/// addition to the reciprocal graininess points it always encloses.
struct PoleSides {
  std::vector<complex> enclosed;
  std::vector<complex> excluded;
};

/// Anticausal poles enclosed, causal poles excluded.
PoleSides pole_sides(const RationalTransform& h);

/// Circle chosen by auto_contour for inverting transforms on `ts`.
Contour default_contour(const TimeScale& ts, Direction kind, const PoleSides& sides = {},
                        std::size_t nodes = kDefaultNodes);

/// Trapezoidal quadrature of
///   nabla: f(t_n) = -(1/2 pi i) \oint F(s) e_nabla(t_{n+1}, t0; s) ds
///   delta: f(t_n) = +(1/2 pi i) \oint F(s) e_delta(t_{n-1}, t0; s) ds
/// Throws ContourInvalid if the circle does not separate the points in
/// `sides` and the reciprocal graininess, IndexOutOfRange at the index with
/// no successor (nabla) or predecessor (delta).
complex contour_inverse(const TransformFn& F, const TimeScale& ts, std::size_t at,
                        const Contour& contour, Direction kind, const PoleSides& sides = {});

/// Every index at once from F sampled at contour.points(). The index with no
/// successor (nabla) or predecessor (delta) is reported as zero.
std::vector<complex> contour_inverse_all(std::span<const complex> F_at_nodes, const TimeScale& ts,
                                         const Contour& contour, Direction kind,
                                         const PoleSides& sides = {});

std::vector<complex> contour_inverse_all(const TransformFn& F, const TimeScale& ts,
                                         const Contour& contour, Direction kind,
                                         const PoleSides& sides = {});

}  // namespace chronoscale
