#pragma once

#include <optional>
#include <span>
#include <vector>

#include "chronoscale/timescale.hpp"

namespace chronoscale {

inline constexpr std::size_t kDefaultNodes = 4096;
inline constexpr std::size_t kMinNodes = 256;

/// Circle |s - center| = radius on the real axis, traversed counterclockwise
/// with `nodes` equispaced trapezoidal nodes.
struct Contour {
  double center = 0.0;
  double radius = 1.0;
  std::size_t nodes = kDefaultNodes;

  /// s_k = center + radius * exp(2 pi i k / nodes).
  std::vector<complex> points() const;

  /// (s_k - center) / nodes: trapezoidal weights for (1/2 pi i) \oint G ds.
  std::vector<complex> weights() const;
};

/// Throws ContourInvalid unless: nodes is a power of two >= 256, every
/// `inside` point lies strictly inside, and every `outside` point lies outside
/// with margin >= 1e-6 * radius.
void validate(const Contour& c, std::span<const complex> inside, std::span<const complex> outside);

/// Reciprocal graininess points c/g for every step of the window, where
/// c = 1 for nabla and -1 for delta.
std::vector<complex> reciprocal_graininess(const TimeScale& ts, Direction kind);

/// Chooses a circle that encloses `inside` with margin 0.1 r, keeps `outside`
/// at distance >= 0.1 r, and minimises the worst log-magnitude excursion of
/// the exponential factors prod (1 + kappa s g) over the nodes
/// (kappa = -1 nabla, +1 delta). Throws ContourInvalid if no circle fits.
Contour auto_contour(std::span<const complex> inside, std::span<const complex> outside,
                     std::span<const double> steps, Direction kind,
                     std::size_t nodes = kDefaultNodes);

/// Region-of-convergence circle through 0 and p: center |p|^2 / (2 Re p),
/// radius |center|. Empty when Re p <= 0.
struct RocCircle {
  double center;
  double radius;
};
std::optional<RocCircle> roc_circle(complex p);

/// (1/2 pi i) \oint G(s) ds given G at contour.points(), summed pairwise.
complex contour_sum(const Contour& c, std::span<const complex> g_at_nodes);

}  // namespace chronoscale
