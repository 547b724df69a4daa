#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "chronoscale/signal.hpp"

namespace testing_support {

using chronoscale::complex;

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

/// Random window: `n` instants, steps uniform in [g_lo, g_hi], t0 at `t0`.
inline chronoscale::ScalePtr random_scale(std::mt19937_64& gen, std::size_t n, std::size_t t0,
                                          double g_lo, double g_hi) {
  std::uniform_real_distribution<double> step(g_lo, g_hi);
  std::vector<double> t(n);
  t[0] = 0.0;
  for (std::size_t k = 1; k < n; ++k) t[k] = t[k - 1] + step(gen);
  const double shift = t[t0];
  for (double& x : t) x -= shift;
  return chronoscale::make_scale(std::move(t), t0);
}

inline chronoscale::ScalePtr hz(double h, long n_min, long n_max) {
  std::vector<double> t;
  for (long n = n_min; n <= n_max; ++n) t.push_back(static_cast<double>(n) * h);
  return chronoscale::make_scale(std::move(t), static_cast<std::size_t>(-n_min));
}

inline complex random_complex(std::mt19937_64& gen, double scale = 1.0) {
  std::uniform_real_distribution<double> u(-scale, scale);
  return {u(gen), u(gen)};
}

/// Random samples on [lo, hi], zero elsewhere.
inline chronoscale::Signal random_signal(std::mt19937_64& gen, const chronoscale::ScalePtr& ts,
                                         std::size_t lo, std::size_t hi) {
  std::vector<complex> v(ts->size(), 0.0);
  for (std::size_t n = lo; n <= hi; ++n) v[n] = random_complex(gen);
  return chronoscale::Signal(ts, std::move(v), chronoscale::IndexRange{lo, hi});
}

inline double rel_err(complex a, complex b) {
  const double d = std::abs(a - b);
  const double m = std::max(std::abs(a), std::abs(b));
  return m == 0.0 ? 0.0 : d / m;
}

/// max |a - b| / max(max |b|, tiny)
inline double normwise_err(const std::vector<complex>& a, const std::vector<complex>& b) {
  double num = 0.0;
  double den = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    num = std::max(num, std::abs(a[k] - b[k]));
    den = std::max(den, std::abs(b[k]));
  }
  return den == 0.0 ? num : num / den;
}

inline double max_abs_diff(const std::vector<complex>& a, const std::vector<complex>& b) {
  double d = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) d = std::max(d, std::abs(a[k] - b[k]));
  return d;
}

}  // namespace testing_support
