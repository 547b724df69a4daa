#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace chronoscale {

using complex = std::complex<double>;

enum class Direction { nabla, delta };

/// Finite window of a discrete time scale: strictly increasing instants plus
/// the index of the reference instant t0.
///
/// Step j (1 <= j < size) is the interval between instants j-1 and j; its
/// length step(j) is both the nabla graininess at j and the delta graininess
/// at j-1. Immutable after construction.
class TimeScale {
 public:
  /// Throws NonMonotone, IndexOutOfRange or TooShort.
  TimeScale(std::vector<double> instants, std::size_t t0_index);

  std::size_t size() const noexcept { return instants_.size(); }
  std::size_t last() const noexcept { return instants_.size() - 1; }
  std::size_t t0_index() const noexcept { return t0_index_; }
  double t0() const noexcept { return instants_[t0_index_]; }
  double operator[](std::size_t n) const noexcept { return instants_[n]; }
  double at(std::size_t n) const;
  std::span<const double> instants() const noexcept { return instants_; }

  /// t_j - t_{j-1}, j in [1, size).
  double step(std::size_t j) const noexcept { return instants_[j] - instants_[j - 1]; }

  /// nu_n = t_n - t_{n-1} (nabla) or mu_n = t_{n+1} - t_n (delta).
  /// Throws BoundaryIndex when the neighbour is outside the window.
  double graininess(std::size_t n, Direction dir) const;

  /// t_from - t_{from-k} (nabla) or t_{from+k} - t_from (delta), computed as a
  /// single difference of stored instants.
  double cumulative_graininess(std::size_t from, std::size_t k, Direction dir) const;

  double min_step() const noexcept { return min_step_; }
  double max_step() const noexcept { return max_step_; }

  /// True when every step equals the first to within `rel_tol`.
  bool is_uniform(double rel_tol = 1e-12) const noexcept;

  /// Index of the instant equal to t after rounding both to 12 significant
  /// digits.
  std::optional<std::size_t> find(double t) const;

  /// Same window with every instant multiplied by a > 0.
  TimeScale scaled(double a) const;

  friend bool operator==(const TimeScale& a, const TimeScale& b) noexcept {
    return a.t0_index_ == b.t0_index_ && a.instants_ == b.instants_;
  }

 private:
  std::vector<double> instants_;
  std::size_t t0_index_;
  double min_step_;
  double max_step_;
};

/// Sorted, deduplicated set of all pairwise differences t_n - t_k.
struct SuperTimeScale {
  std::vector<double> instants;
  std::size_t origin_index;

  /// Index of d after 12-significant-digit rounding, if present.
  std::optional<std::size_t> find(double d) const;
};

/// Rounds to 12 significant digits; the equality used for instants and
/// pairwise differences throughout.
double round_significant(double x, int digits = 12) noexcept;
bool same_instant(double a, double b) noexcept;

SuperTimeScale super_time_scale(const TimeScale& ts);

/// Uniform scale {n*h : n_min <= n <= n_max} with t0 at n = 0.
/// Throws InvalidStep for h <= 0, IndexOutOfRange unless n_min <= 0 <= n_max.
TimeScale uniform_grid(double h, long n_min, long n_max);

}  // namespace chronoscale
