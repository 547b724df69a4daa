#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "chronoscale/timescale.hpp"

namespace chronoscale {

/// Inclusive index interval [lo, hi].
struct IndexRange {
  std::size_t lo;
  std::size_t hi;

  bool contains(std::size_t n) const noexcept { return lo <= n && n <= hi; }
  std::size_t length() const noexcept { return hi - lo + 1; }
  friend bool operator==(const IndexRange&, const IndexRange&) = default;
};

using ScalePtr = std::shared_ptr<const TimeScale>;

/// Complex samples on a time-scale window. Values outside the support are zero
/// by contract; an empty support is the zero signal.
class Signal {
 public:
  /// Explicit support; throws InvalidSignal if a value outside it is nonzero,
  /// any value is non-finite, or the length does not match the scale.
  Signal(ScalePtr scale, std::vector<complex> values, std::optional<IndexRange> support);

  /// Support is the tight hull of the nonzero samples.
  static Signal from_values(ScalePtr scale, std::vector<complex> values);
  static Signal zero(ScalePtr scale);

  const TimeScale& scale() const noexcept { return *scale_; }
  const ScalePtr& scale_ptr() const noexcept { return scale_; }
  std::size_t size() const noexcept { return values_.size(); }
  complex operator[](std::size_t n) const noexcept { return values_[n]; }
  const std::vector<complex>& values() const noexcept { return values_; }
  const std::optional<IndexRange>& support() const noexcept { return support_; }
  bool is_zero() const noexcept { return !support_.has_value(); }

 private:
  ScalePtr scale_;
  std::vector<complex> values_;
  std::optional<IndexRange> support_;
};

std::optional<IndexRange> tight_support(const std::vector<complex>& values);

inline ScalePtr make_scale(std::vector<double> instants, std::size_t t0_index) {
  return std::make_shared<const TimeScale>(std::move(instants), t0_index);
}

inline ScalePtr share(TimeScale ts) { return std::make_shared<const TimeScale>(std::move(ts)); }

}  // namespace chronoscale
