#include "chronoscale/contour.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "chronoscale/error.hpp"
#include "chronoscale/summation.hpp"

namespace chronoscale {

namespace {

constexpr double kOutsideMargin = 1e-6;
constexpr double kInsideFraction = 0.9;
constexpr double kOutsideFactor = 1.1;
constexpr std::size_t kCentreCandidates = 257;
constexpr std::size_t kRadiusCandidates = 6;
constexpr std::size_t kProbeAngles = 64;
constexpr std::size_t kMaxBins = 256;

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

struct Bin {
  double g;
  double count;
};

std::vector<Bin> quantile_bins(std::span<const double> steps) {
  std::vector<double> sorted(steps.begin(), steps.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<Bin> bins;
  if (sorted.empty()) return bins;
  const std::size_t n_bins = std::min(sorted.size(), kMaxBins);
  for (std::size_t b = 0; b < n_bins; ++b) {
    const std::size_t lo = b * sorted.size() / n_bins;
    const std::size_t hi = (b + 1) * sorted.size() / n_bins;
    double sum = 0.0;
    for (std::size_t i = lo; i < hi; ++i) sum += sorted[i];
    bins.push_back({sum / static_cast<double>(hi - lo), static_cast<double>(hi - lo)});
  }
  return bins;
}

double excursion(double centre, double radius, const std::vector<Bin>& bins, double kappa) {
  double worst = 0.0;
  for (std::size_t k = 0; k < kProbeAngles; ++k) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / kProbeAngles;
    const complex s = centre + std::polar(radius, theta);
    double total = 0.0;
    for (const Bin& b : bins) total += b.count * std::abs(std::log(std::abs(1.0 + kappa * s * b.g)));
    worst = std::max(worst, total);
  }
  return worst;
}

}  // namespace

std::vector<complex> Contour::points() const {
  std::vector<complex> out(nodes);
  for (std::size_t k = 0; k < nodes; ++k) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(nodes);
    out[k] = center + std::polar(radius, theta);
  }
  return out;
}

std::vector<complex> Contour::weights() const {
  std::vector<complex> out(nodes);
  const double inv = 1.0 / static_cast<double>(nodes);
  for (std::size_t k = 0; k < nodes; ++k) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(nodes);
    out[k] = std::polar(radius, theta) * inv;
  }
  return out;
}

void validate(const Contour& c, std::span<const complex> inside, std::span<const complex> outside) {
  std::ostringstream msg;
  if (!(c.radius > 0.0) || !std::isfinite(c.radius) || !std::isfinite(c.center)) {
    msg << "radius must be positive and finite";
  } else if (c.nodes < kMinNodes || !is_power_of_two(c.nodes)) {
    msg << "node count " << c.nodes << " must be a power of two >= " << kMinNodes;
  } else {
    for (complex z : inside) {
      if (!(std::abs(z - c.center) < c.radius)) {
        msg << "point " << z << " is not inside circle (" << c.center << ", " << c.radius << ")";
        break;
      }
    }
    if (msg.tellp() == 0) {
      for (complex p : outside) {
        if (!(std::abs(p - c.center) >= c.radius * (1.0 + kOutsideMargin))) {
          msg << "pole " << p << " is not outside circle (" << c.center << ", " << c.radius
              << ") with margin";
          break;
        }
      }
    }
  }
  if (msg.tellp() != 0) throw Error(ErrorCode::ContourInvalid, msg.str());
}

std::vector<complex> reciprocal_graininess(const TimeScale& ts, Direction kind) {
  const double sign = kind == Direction::nabla ? 1.0 : -1.0;
  std::vector<complex> out;
  out.reserve(ts.size() - 1);
  for (std::size_t j = 1; j < ts.size(); ++j) out.emplace_back(sign / ts.step(j), 0.0);
  return out;
}

Contour auto_contour(std::span<const complex> inside, std::span<const complex> outside,
                     std::span<const double> steps, Direction kind, std::size_t nodes) {
  const double kappa = kind == Direction::nabla ? -1.0 : 1.0;
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  double scale = 0.0;
  for (complex z : inside) {
    lo = std::min(lo, z.real());
    hi = std::max(hi, z.real());
    scale = std::max(scale, std::abs(z));
  }
  if (inside.empty()) {
    lo = hi = kappa < 0 ? 1.0 : -1.0;
    scale = 1.0;
  }
  if (scale == 0.0) scale = 1.0;
  const double span = (hi - lo) + scale;
  const std::vector<Bin> bins = quantile_bins(steps);

  double best_score = std::numeric_limits<double>::infinity();
  Contour best{0.0, 0.0, nodes};
  for (std::size_t ci = 0; ci < kCentreCandidates; ++ci) {
    const double centre = (lo - span) + (hi - lo + 2.0 * span) * static_cast<double>(ci) /
                                            static_cast<double>(kCentreCandidates - 1);
    double dmax = 0.0;
    for (complex z : inside) dmax = std::max(dmax, std::abs(z - centre));
    const double r_min = std::max(dmax / kInsideFraction, 0.05 * scale);
    double r_max = std::numeric_limits<double>::infinity();
    for (complex p : outside) r_max = std::min(r_max, std::abs(p - centre) / kOutsideFactor);
    if (r_min > r_max) continue;
    const double r_top = std::min(r_max, 4.0 * r_min);
    for (std::size_t ri = 0; ri < kRadiusCandidates; ++ri) {
      const double t = static_cast<double>(ri) / static_cast<double>(kRadiusCandidates - 1);
      const double r = r_min * std::pow(r_top / r_min, t);
      const double score = excursion(centre, r, bins, kappa);
      if (score < best_score) {
        best_score = score;
        best = Contour{centre, r, nodes};
      }
    }
  }
  if (!(best.radius > 0.0)) {
    throw Error(ErrorCode::ContourInvalid, "no circle separates the enclosed and excluded points");
  }
  validate(best, inside, outside);
  return best;
}

std::optional<RocCircle> roc_circle(complex p) {
  if (!(p.real() > 0.0)) return std::nullopt;
  const double centre = std::norm(p) / (2.0 * p.real());
  return RocCircle{centre, std::abs(centre)};
}

complex contour_sum(const Contour& c, std::span<const complex> g_at_nodes) {
  const std::vector<complex> w = c.weights();
  std::vector<complex> terms(g_at_nodes.size());
  for (std::size_t k = 0; k < terms.size(); ++k) terms[k] = g_at_nodes[k] * w[k];
  return pairwise_sum<complex>(terms);
}

}  // namespace chronoscale
