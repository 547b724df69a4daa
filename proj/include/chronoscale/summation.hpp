#pragma once

#include <complex>
#include <cstddef>
#include <span>

namespace chronoscale {

/// Fixed-order pairwise summation: blocks of 8 summed left to right, halves
/// combined recursively. Deterministic for a given length.
template <class T>
T pairwise_sum(std::span<const T> xs) {
  if (xs.size() <= 8) {
    T acc{};
    for (const T& x : xs) acc += x;
    return acc;
  }
  const std::size_t half = xs.size() / 2;
  return pairwise_sum(xs.first(half)) + pairwise_sum(xs.subspan(half));
}

}  // namespace chronoscale
