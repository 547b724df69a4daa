#include "chronoscale/systems.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "chronoscale/calculus.hpp"
#include "chronoscale/error.hpp"
#include "chronoscale/exponential.hpp"
#include "chronoscale/transform.hpp"

namespace chronoscale {

namespace {

constexpr double kSingularTolerance = 1e-14;

int trimmed_degree(const std::vector<complex>& c) {
  for (std::size_t k = c.size(); k > 0; --k) {
    if (c[k - 1] != 0.0) return static_cast<int>(k - 1);
  }
  return -1;
}

/// Exponent of step j in e_delta(t_a, t0; -s) = prod (1 - s g_j)^chi.
int chi(std::size_t a, std::size_t j, std::size_t t0) {
  if (t0 < j && j <= a) return 1;
  if (a < j && j <= t0) return -1;
  return 0;
}

struct Representation {
  std::size_t n;
  std::size_t m;
};

/// tau = t_n - t_m with n + 1 <= last, m closest to t0.
std::optional<Representation> represent(const TimeScale& ts, double tau) {
  const std::size_t t0 = ts.t0_index();
  std::vector<std::size_t> order(ts.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [t0](std::size_t a, std::size_t b) {
    const auto da = a > t0 ? a - t0 : t0 - a;
    const auto db = b > t0 ? b - t0 : t0 - b;
    return da < db;
  });
  for (std::size_t m : order) {
    const auto n = ts.find(ts[m] + tau);
    if (n && *n < ts.last() && same_instant(ts[*n] - ts[m], tau)) return Representation{*n, m};
  }
  return std::nullopt;
}

void require_same_scale(const Signal& f, const Signal& g) {
  if (f.scale_ptr() != g.scale_ptr() && !(f.scale() == g.scale())) {
    throw Error(ErrorCode::ScaleMismatch, "signals live on different time scales");
  }
}

}  // namespace

Signal impulse_response(const RationalTransform& h, ScalePtr ts) {
  return invert_rational(h, std::move(ts));
}

Simulation simulate(const std::vector<complex>& a, const std::vector<complex>& b, const Signal& x) {
  const int n_order = trimmed_degree(a);
  if (n_order < 0) throw Error(ErrorCode::DegenerateDenominator, "equation coefficients are all zero");
  const int m_order = trimmed_degree(b);
  const TimeScale& ts = x.scale();
  if (x.is_zero() || m_order < 0) return {Signal::zero(x.scale_ptr()), {}};

  const std::size_t lo = x.support()->lo;
  const auto history = static_cast<std::size_t>(std::max(n_order, m_order));
  if (lo < history) {
    std::ostringstream msg;
    msg << "input starts at index " << lo << " but the equation needs " << history
        << " earlier instants";
    throw Error(ErrorCode::WindowTooSmall, msg.str());
  }

  std::vector<complex> rhs(ts.size(), 0.0);
  for (int k = 0; k <= m_order; ++k) {
    if (b[k] == 0.0) continue;
    const Signal dx = k == 0 ? x : derivative(x, Direction::nabla, k);
    for (std::size_t n = lo; n < ts.size(); ++n) rhs[n] += b[k] * dx[n];
  }

  const auto order = static_cast<std::size_t>(n_order);
  std::vector<complex> y(ts.size(), 0.0);
  std::vector<complex> prev(order + 1, 0.0);
  std::vector<complex> slope(order + 1);
  std::vector<complex> offset(order + 1);
  SimulationSummary summary;
  for (std::size_t n = lo; n < ts.size(); ++n) {
    const double nu = ts.step(n);
    slope[0] = 1.0;
    offset[0] = 0.0;
    for (std::size_t k = 1; k <= order; ++k) {
      slope[k] = slope[k - 1] / nu;
      offset[k] = (offset[k - 1] - prev[k - 1]) / nu;
    }
    complex den = 0.0;
    complex known = 0.0;
    double mag = 0.0;
    for (std::size_t k = 0; k <= order; ++k) {
      den += a[k] * slope[k];
      known += a[k] * offset[k];
      mag += std::abs(a[k] * slope[k]);
    }
    const double margin = mag > 0.0 ? std::abs(den) / mag : 0.0;
    if (margin < kSingularTolerance) {
      std::ostringstream msg;
      msg << "1/nu at index " << n << " is a root of the characteristic polynomial";
      throw Error(ErrorCode::SingularStep, msg.str());
    }
    summary.min_guard_margin = std::min(summary.min_guard_margin, margin);
    ++summary.steps;
    y[n] = (rhs[n] - known) / den;
    for (std::size_t k = 0; k <= order; ++k) prev[k] = slope[k] * y[n] + offset[k];
  }
  return {Signal::from_values(x.scale_ptr(), std::move(y)), summary};
}

complex shifted_transform_factor(const TimeScale& ts, std::size_t m, complex s) {
  return exp(ts, m, ts.t0_index(), -s, Direction::delta);
}

double shift_kernel_exact(const TimeScale& ts, std::size_t n, std::size_t m, std::size_t k) {
  if (n + 1 > ts.last() || m >= ts.size() || k >= ts.size()) {
    throw Error(ErrorCode::IndexOutOfRange, "shift kernel index outside window");
  }
  const std::size_t t0 = ts.t0_index();
  const std::size_t lo = std::min({m, k, n + 1, t0});
  const std::size_t hi = std::max({m, k, n + 1, t0});

  std::vector<int> e;
  e.reserve(hi - lo);
  long total = 0;
  for (std::size_t j = lo + 1; j <= hi; ++j) {
    const int ej = chi(m, j, t0) + chi(k, j, t0) - chi(n + 1, j, t0);
    e.push_back(ej);
    total += ej;
  }
  if (total + 1 < 0) return 0.0;

  // prod (1 - s g)^e = C s^E prod (1 - u/g)^e with u = 1/s; the residue at
  // infinity picks the u^(E+1) coefficient.
  const auto order = static_cast<std::size_t>(total + 1);
  std::vector<double> q(order + 1, 0.0);
  q[0] = 1.0;
  double c = 1.0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    const int ej = e[i];
    if (ej == 0) continue;
    const double g = ts.step(lo + 1 + i);
    const double x = 1.0 / g;
    for (int rep = 0; rep < std::abs(ej); ++rep) {
      if (ej > 0) {
        c *= -g;
        for (std::size_t r = order; r >= 1; --r) q[r] -= x * q[r - 1];
      } else {
        c /= -g;
        for (std::size_t r = 1; r <= order; ++r) q[r] += x * q[r - 1];
      }
    }
  }
  return -c * q[order];
}

complex interpolate(const Signal& f, double tau, const InterpolateOptions& opts) {
  const TimeScale& ts = f.scale();
  const auto on_grid = ts.find(ts.t0() + tau);
  const bool grid_target = on_grid && same_instant(ts[*on_grid] - ts.t0(), tau);
  if (opts.grid_shortcut && grid_target) return f[*on_grid];

  const auto rep = represent(ts, tau);
  if (!rep) {
    if (grid_target) return f[*on_grid];
    std::ostringstream msg;
    msg << "offset " << tau << " is not a difference t_n - t_m with t_{n+1} in the window";
    throw Error(ErrorCode::TargetOffSuperScale, msg.str());
  }
  if (f.is_zero()) return 0.0;
  const std::size_t t0 = ts.t0_index();

  if (opts.method == InterpolateOptions::Method::residue) {
    const IndexRange sup = *f.support();
    if (sup.hi == ts.last()) {
      throw Error(ErrorCode::SupportTouchesBoundary, "support reaches the last instant");
    }
    complex acc = 0.0;
    for (std::size_t k = sup.lo; k <= sup.hi; ++k) {
      if (f[k] == 0.0) continue;
      acc += ts.step(k + 1) * f[k] * shift_kernel_exact(ts, rep->n, rep->m, k);
    }
    return acc;
  }

  const Contour contour =
      opts.contour ? *opts.contour : default_contour(ts, Direction::nabla, {}, opts.nodes);
  validate(contour, reciprocal_graininess(ts, Direction::nabla), {});
  const std::vector<complex> pts = contour.points();
  std::vector<complex> values = direct_transform(f, pts, Direction::nabla);
  const std::size_t lo = std::min({rep->m, rep->n + 1, t0});
  const std::size_t hi = std::max({rep->m, rep->n + 1, t0});
  for (std::size_t j = lo + 1; j <= hi; ++j) {
    const int ej = chi(rep->m, j, t0) - chi(rep->n + 1, j, t0);
    if (ej == 0) continue;
    const double g = ts.step(j);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const complex factor = 1.0 - pts[i] * g;
      values[i] = ej > 0 ? values[i] * factor : values[i] / factor;
    }
  }
  return -contour_sum(contour, values);
}

Signal convolve(const Signal& f, const Signal& g, const ConvolveOptions& opts) {
  require_same_scale(f, g);
  const TimeScale& ts = f.scale();
  if (f.is_zero() || g.is_zero()) return Signal::zero(f.scale_ptr());
  const IndexRange sf = *f.support();
  const IndexRange sg = *g.support();
  const auto t0 = static_cast<long>(ts.t0_index());
  const auto last = static_cast<long>(ts.last());
  std::vector<complex> out(ts.size(), 0.0);

  if (ts.is_uniform()) {
    const long lo = std::max(0L, static_cast<long>(sf.lo + sg.lo) - t0);
    const long hi = std::min(last, static_cast<long>(sf.hi + sg.hi) - t0);
    if (lo > hi) {
      throw Error(ErrorCode::WindowTooSmall, "convolution support falls outside the window");
    }
    const double h = ts.step(1);
    for (long n = lo; n <= hi; ++n) {
      complex acc = 0.0;
      for (std::size_t m = sf.lo; m <= sf.hi; ++m) {
        const long idx = n - static_cast<long>(m) + t0;
        if (idx < 0 || idx > last) continue;
        acc += h * f[m] * g[static_cast<std::size_t>(idx)];
      }
      out[static_cast<std::size_t>(n)] = acc;
    }
    return Signal(f.scale_ptr(), std::move(out), IndexRange{static_cast<std::size_t>(lo),
                                                            static_cast<std::size_t>(hi)});
  }

  if (!opts.general) {
    throw Error(ErrorCode::NotShiftClosed,
                "scale is not uniform; enable the general path to convolve by interpolation");
  }
  if (sf.hi == ts.last() || sg.hi == ts.last()) {
    throw Error(ErrorCode::SupportTouchesBoundary, "support reaches the last instant");
  }
  for (std::size_t n = 0; n < ts.last(); ++n) {
    complex acc = 0.0;
    for (std::size_t m = sf.lo; m <= sf.hi; ++m) {
      if (f[m] == 0.0) continue;
      const complex fm = ts.step(m + 1) * f[m];
      for (std::size_t k = sg.lo; k <= sg.hi; ++k) {
        if (g[k] == 0.0) continue;
        acc += fm * (ts.step(k + 1) * g[k]) * shift_kernel_exact(ts, n, m, k);
      }
    }
    out[n] = acc;
  }
  return Signal::from_values(f.scale_ptr(), std::move(out));
}

Signal reflect(const Signal& g) {
  const TimeScale& ts = g.scale();
  if (g.is_zero()) return g;
  std::vector<complex> out(ts.size(), 0.0);
  const IndexRange sup = *g.support();
  for (std::size_t k = sup.lo; k <= sup.hi; ++k) {
    const double mirror = 2.0 * ts.t0() - ts[k];
    const auto n = ts.find(mirror);
    if (!n) {
      std::ostringstream msg;
      msg << "mirror image " << mirror << " of instant " << ts[k] << " is not in the window";
      throw Error(ErrorCode::ReflectionOffGrid, msg.str());
    }
    out[*n] = g[k];
  }
  return Signal::from_values(g.scale_ptr(), std::move(out));
}

Signal correlate(const Signal& f, const Signal& g, const ConvolveOptions& opts) {
  require_same_scale(f, g);
  return convolve(f, reflect(g), opts);
}

Signal resample_uniform(const Signal& f, double h, const ResampleOptions& opts) {
  if (!(h > 0.0) || !std::isfinite(h)) {
    throw Error(ErrorCode::IncompatibleStep, "resampling step must be positive");
  }
  const TimeScale& ts = f.scale();
  const double t0 = ts.t0();
  const auto n_min = static_cast<long>(std::ceil((ts[0] - t0) / h - 1e-9));
  const auto n_max = static_cast<long>(std::floor((ts[ts.last()] - t0) / h + 1e-9));
  std::vector<double> instants;
  for (long n = n_min; n <= n_max; ++n) {
    const double t = t0 + static_cast<double>(n) * h;
    const auto idx = ts.find(t);
    instants.push_back(idx ? ts[*idx] : t);
  }
  if (instants.size() < 2) {
    throw Error(ErrorCode::IncompatibleStep, "step leaves fewer than two instants in the window");
  }
  auto grid = make_scale(instants, static_cast<std::size_t>(-n_min));

  std::optional<SuperTimeScale> super;
  std::vector<complex> values(instants.size(), 0.0);
  for (std::size_t i = 0; i < instants.size(); ++i) {
    const double tau = instants[i] - t0;
    try {
      values[i] = interpolate(f, tau, opts.interp);
      continue;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::TargetOffSuperScale) throw;
      if (!opts.allow_off_scale) {
        std::ostringstream msg;
        msg << "target offset " << tau << " is not in the super time scale";
        throw Error(ErrorCode::IncompatibleStep, msg.str());
      }
    }
    if (!super) super = super_time_scale(ts);
    const auto& d = super->instants;
    const auto pos = static_cast<std::size_t>(std::lower_bound(d.begin(), d.end(), tau) - d.begin());
    std::optional<std::pair<double, complex>> left;
    std::optional<std::pair<double, complex>> right;
    for (std::size_t j = pos; j-- > 0 && !left;) {
      try {
        left.emplace(d[j], interpolate(f, d[j], opts.interp));
      } catch (const Error& e) {
        if (e.code() != ErrorCode::TargetOffSuperScale) throw;
      }
    }
    for (std::size_t j = pos; j < d.size() && !right; ++j) {
      try {
        right.emplace(d[j], interpolate(f, d[j], opts.interp));
      } catch (const Error& e) {
        if (e.code() != ErrorCode::TargetOffSuperScale) throw;
      }
    }
    if (!left || !right) {
      std::ostringstream msg;
      msg << "target offset " << tau << " lies beyond the super time scale";
      throw Error(ErrorCode::IncompatibleStep, msg.str());
    }
    const double w = (tau - left->first) / (right->first - left->first);
    values[i] = (1.0 - w) * left->second + w * right->second;
  }
  return Signal::from_values(std::move(grid), std::move(values));
}

}  // namespace chronoscale
