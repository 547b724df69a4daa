#include "chronoscale/signal.hpp"

#include <cmath>
#include <string>

#include "chronoscale/error.hpp"

namespace chronoscale {

Signal::Signal(ScalePtr scale, std::vector<complex> values, std::optional<IndexRange> support)
    : scale_(std::move(scale)), values_(std::move(values)), support_(support) {
  if (!scale_) throw Error(ErrorCode::InvalidSignal, "null time scale");
  if (values_.size() != scale_->size()) {
    throw Error(ErrorCode::InvalidSignal, "expected " + std::to_string(scale_->size()) +
                                              " samples, got " + std::to_string(values_.size()));
  }
  if (support_ && (support_->lo > support_->hi || support_->hi >= values_.size())) {
    throw Error(ErrorCode::InvalidSignal, "support outside window");
  }
  for (std::size_t n = 0; n < values_.size(); ++n) {
    const complex v = values_[n];
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw Error(ErrorCode::InvalidSignal, "non-finite sample at index " + std::to_string(n));
    }
    if (v != complex{} && !(support_ && support_->contains(n))) {
      throw Error(ErrorCode::InvalidSignal,
                  "nonzero sample outside support at index " + std::to_string(n));
    }
  }
}

Signal Signal::from_values(ScalePtr scale, std::vector<complex> values) {
  auto support = tight_support(values);
  return Signal(std::move(scale), std::move(values), support);
}

Signal Signal::zero(ScalePtr scale) {
  const std::size_t n = scale->size();
  return Signal(std::move(scale), std::vector<complex>(n), std::nullopt);
}

std::optional<IndexRange> tight_support(const std::vector<complex>& values) {
  std::size_t lo = values.size();
  std::size_t hi = 0;
  for (std::size_t n = 0; n < values.size(); ++n) {
    if (values[n] != complex{}) {
      lo = std::min(lo, n);
      hi = n;
    }
  }
  if (lo == values.size()) return std::nullopt;
  return IndexRange{lo, hi};
}

}  // namespace chronoscale
