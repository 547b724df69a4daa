#include "chronoscale/timescale.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "chronoscale/error.hpp"

namespace chronoscale {

TimeScale::TimeScale(std::vector<double> instants, std::size_t t0_index)
    : instants_(std::move(instants)), t0_index_(t0_index) {
  if (instants_.size() < 2) {
    throw Error(ErrorCode::TooShort, "a time scale needs at least two instants, got " +
                                         std::to_string(instants_.size()));
  }
  if (t0_index_ >= instants_.size()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "t0_index " + std::to_string(t0_index_) + " outside window of " +
                    std::to_string(instants_.size()));
  }
  min_step_ = std::numeric_limits<double>::infinity();
  max_step_ = 0.0;
  for (std::size_t j = 1; j < instants_.size(); ++j) {
    if (!std::isfinite(instants_[j]) || !std::isfinite(instants_[j - 1]) ||
        !(instants_[j] > instants_[j - 1])) {
      throw Error(ErrorCode::NonMonotone,
                  "instant " + std::to_string(j) + " does not exceed its predecessor");
    }
    min_step_ = std::min(min_step_, step(j));
    max_step_ = std::max(max_step_, step(j));
  }
}

double TimeScale::at(std::size_t n) const {
  if (n >= size()) {
    throw Error(ErrorCode::IndexOutOfRange, "index " + std::to_string(n));
  }
  return instants_[n];
}

double TimeScale::graininess(std::size_t n, Direction dir) const {
  if (n >= size()) throw Error(ErrorCode::IndexOutOfRange, "index " + std::to_string(n));
  if (dir == Direction::nabla) {
    if (n == 0) throw Error(ErrorCode::BoundaryIndex, "no left neighbour of index 0");
    return step(n);
  }
  if (n == last()) {
    throw Error(ErrorCode::BoundaryIndex, "no right neighbour of index " + std::to_string(n));
  }
  return step(n + 1);
}

double TimeScale::cumulative_graininess(std::size_t from, std::size_t k, Direction dir) const {
  if (from >= size()) throw Error(ErrorCode::IndexOutOfRange, "index " + std::to_string(from));
  if (dir == Direction::nabla) {
    if (k > from) throw Error(ErrorCode::BoundaryIndex, "nabla steps leave the window");
    return instants_[from] - instants_[from - k];
  }
  if (from + k > last()) throw Error(ErrorCode::BoundaryIndex, "delta steps leave the window");
  return instants_[from + k] - instants_[from];
}

bool TimeScale::is_uniform(double rel_tol) const noexcept {
  const double h = step(1);
  for (std::size_t j = 2; j < size(); ++j) {
    if (std::abs(step(j) - h) > rel_tol * h) return false;
  }
  return true;
}

std::optional<std::size_t> TimeScale::find(double t) const {
  const auto pos = static_cast<std::size_t>(
      std::lower_bound(instants_.begin(), instants_.end(), t) - instants_.begin());
  // Rounding can move t across one neighbour of the insertion point.
  for (std::size_t cand = (pos == 0 ? 0 : pos - 1); cand <= pos && cand < size(); ++cand) {
    if (same_instant(instants_[cand], t)) return cand;
  }
  return std::nullopt;
}

TimeScale TimeScale::scaled(double a) const {
  if (!(a > 0.0)) throw Error(ErrorCode::InvalidStep, "scale factor must be positive");
  std::vector<double> out(instants_);
  for (double& t : out) t *= a;
  return TimeScale(std::move(out), t0_index_);
}

double round_significant(double x, int digits) noexcept {
  if (x == 0.0 || !std::isfinite(x)) return x;
  const int exponent = static_cast<int>(std::floor(std::log10(std::abs(x))));
  const double scale = std::pow(10.0, digits - 1 - exponent);
  return std::round(x * scale) / scale;
}

bool same_instant(double a, double b) noexcept {
  if (a == b) return true;
  const double mag = std::max(std::abs(a), std::abs(b));
  if (std::abs(a - b) <= 1e-12 * mag) return true;
  return round_significant(a) == round_significant(b);
}

std::optional<std::size_t> SuperTimeScale::find(double d) const {
  const auto pos = static_cast<std::size_t>(
      std::lower_bound(instants.begin(), instants.end(), d) - instants.begin());
  for (std::size_t cand = (pos == 0 ? 0 : pos - 1); cand <= pos && cand < instants.size(); ++cand) {
    if (same_instant(instants[cand], d)) return cand;
  }
  return std::nullopt;
}

SuperTimeScale super_time_scale(const TimeScale& ts) {
  const auto t = ts.instants();
  std::vector<double> diffs;
  diffs.reserve(t.size() * t.size());
  for (double a : t) {
    for (double b : t) diffs.push_back(a - b);
  }
  std::sort(diffs.begin(), diffs.end());

  // Collapse runs that agree to 12 significant digits; a run is represented
  // by its rounded value so d and -d stay exact negations of each other.
  std::vector<double> out;
  for (double d : diffs) {
    const double r = (d == 0.0) ? 0.0 : round_significant(d);
    if (out.empty() || !same_instant(out.back(), r)) out.push_back(r);
  }
  SuperTimeScale sts{std::move(out), 0};
  sts.origin_index = *sts.find(0.0);
  return sts;
}

TimeScale uniform_grid(double h, long n_min, long n_max) {
  if (!(h > 0.0) || !std::isfinite(h)) {
    throw Error(ErrorCode::InvalidStep, "grid step must be positive");
  }
  if (n_min > 0 || n_max < 0) {
    throw Error(ErrorCode::IndexOutOfRange, "grid index range must contain 0");
  }
  std::vector<double> instants;
  instants.reserve(static_cast<std::size_t>(n_max - n_min + 1));
  for (long n = n_min; n <= n_max; ++n) instants.push_back(static_cast<double>(n) * h);
  return TimeScale(std::move(instants), static_cast<std::size_t>(-n_min));
}

}  // namespace chronoscale
