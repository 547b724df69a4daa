#include "chronoscale/fractional.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "chronoscale/calculus.hpp"
#include "chronoscale/error.hpp"
#include "chronoscale/simd/kernels.hpp"
#include "chronoscale/transform.hpp"

namespace chronoscale {

namespace {

constexpr double kClusterSpread = 0.05;
constexpr double kMinSeparation = 1e-6;
constexpr double kSeriesTolerance = 1e-18;
constexpr std::size_t kMaxSeriesTerms = 4000;
constexpr double kConditionLimit = 1e7;

struct DividedDifference {
  double value;
  /// sum of |terms| / |value|; 1 for the series evaluation.
  double condition;
};

bool is_nonnegative_integer(double a) { return a >= 0.0 && std::floor(a) == a; }

/// Series about the mean c: sum_{j >= n} binom(beta, j) c^(beta - j) h_{j-n}(y)
/// with y = x - c and h_d the complete homogeneous symmetric polynomials.
std::optional<double> series_divided_difference(std::span<const double> x, double beta, double c,
                                                double r) {
  const std::size_t n = x.size() - 1;
  std::size_t depth = 0;
  if (r > 0.0) {
    const double target = std::log(kSeriesTolerance);
    const double nn = static_cast<double>(n);
    while (depth < kMaxSeriesTerms) {
      const double d = static_cast<double>(depth);
      const double log_term =
          std::lgamma(nn + d + 1.0) - std::lgamma(d + 1.0) - std::lgamma(nn + 1.0) + d * std::log(r);
      if (depth > 0 && log_term < target) break;
      ++depth;
    }
    if (depth >= kMaxSeriesTerms) return std::nullopt;
  }

  std::vector<double> h(depth + 1, 0.0);
  h[0] = 1.0;
  for (double xi : x) {
    const double y = xi - c;
    for (std::size_t d = 1; d <= depth; ++d) h[d] += y * h[d - 1];
  }

  double b = std::pow(c, beta);
  for (std::size_t j = 0; j < n; ++j) b *= (beta - static_cast<double>(j)) / (static_cast<double>(j + 1) * c);
  double sum = 0.0;
  for (std::size_t d = 0; d <= depth; ++d) {
    sum += b * h[d];
    const double j = static_cast<double>(n + d);
    b *= (beta - j) / ((j + 1.0) * c);
  }
  return sum;
}

DividedDifference divided_difference(std::span<const double> x, double beta) {
  const auto [mn, mx] = std::minmax_element(x.begin(), x.end());
  const double c = std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(x.size());
  const double r = std::max(*mx - c, c - *mn) / c;
  if ((*mx - *mn) / c <= kClusterSpread) {
    if (auto v = series_divided_difference(x, beta, c, r)) return {*v, 1.0};
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      if (std::abs(x[i] - x[j]) < kMinSeparation * c) {
        std::ostringstream msg;
        msg << "steps " << x[i] << " and " << x[j] << " are not separated by 1e-6 relative";
        throw Error(ErrorCode::RepeatedGraininess, msg.str());
      }
    }
  }
  double sum = 0.0;
  double mag = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    double term = std::pow(x[i], beta);
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (j != i) term /= x[i] - x[j];
    }
    sum += term;
    mag += std::abs(term);
  }
  const double condition = sum != 0.0 ? mag / std::abs(sum) : std::numeric_limits<double>::infinity();
  return {sum, condition};
}

std::vector<double> steps_after(const TimeScale& ts, std::size_t ref, std::size_t n) {
  std::vector<double> g;
  g.reserve(n - ref + 1);
  for (std::size_t j = ref + 1; j <= n + 1; ++j) g.push_back(ts.step(j));
  return g;
}

/// -(1/2 pi i) \oint s^alpha prod (1 - s g)^-1 ds.
complex contour_delta(std::span<const double> g, double alpha, std::size_t nodes) {
  std::vector<complex> inside;
  for (double gi : g) inside.emplace_back(1.0 / gi, 0.0);
  const complex origin[1] = {0.0};
  const Contour contour = auto_contour(inside, origin, g, Direction::nabla, nodes);
  const std::vector<complex> pts = contour.points();
  std::vector<double> re(pts.size());
  std::vector<double> im(pts.size());
  std::vector<double> sre(pts.size());
  std::vector<double> sim(pts.size());
  for (std::size_t k = 0; k < pts.size(); ++k) {
    const complex p = std::pow(pts[k], alpha);
    re[k] = p.real();
    im[k] = p.imag();
    sre[k] = pts[k].real();
    sim[k] = pts[k].imag();
  }
  simd::apply_linear_factors(g, -1.0, true, {sre, sim}, {re, im});
  std::vector<complex> values(pts.size());
  for (std::size_t k = 0; k < pts.size(); ++k) values[k] = {re[k], im[k]};
  return -contour_sum(contour, values);
}

/// Kernel value delta (not weighted) from the steps following the reference.
complex delta_value(std::span<const double> g, double alpha, KernelMethod& used) {
  const std::size_t k = g.size() - 1;
  if (is_nonnegative_integer(alpha) && static_cast<double>(k) >= alpha + 1.0) return 0.0;
  try {
    const DividedDifference dd = divided_difference(g, static_cast<double>(k) - alpha - 1.0);
    if (dd.condition < kConditionLimit) return dd.value;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::RepeatedGraininess) throw;
  }
  used = KernelMethod::contour;
  return contour_delta(g, alpha, kDefaultNodes);
}

void require_weight_index(const TimeScale& ts, std::size_t n) {
  if (n >= ts.last()) {
    throw Error(ErrorCode::BoundaryIndex, "kernel weight needs the step after the instant");
  }
}

}  // namespace

namespace detail {
double divided_difference_power(std::span<const double> x, double beta) {
  return divided_difference(x, beta).value;
}
}  // namespace detail

std::string_view kernel_method_name(KernelMethod m) noexcept {
  switch (m) {
    case KernelMethod::uniform_GL: return "uniform_GL";
    case KernelMethod::distinct_residue: return "distinct_residue";
    case KernelMethod::contour: return "contour";
  }
  return "contour";
}

FractionalKernel gl_kernel_uniform(double alpha, double h, std::size_t n_terms) {
  if (!(h > 0.0) || !std::isfinite(h)) throw Error(ErrorCode::InvalidStep, "step must be positive");
  if (n_terms < 1) throw Error(ErrorCode::TooShort, "kernel needs at least one term");
  std::vector<double> t(std::max<std::size_t>(n_terms, 2));
  for (std::size_t k = 0; k < t.size(); ++k) t[k] = static_cast<double>(k) * h;
  FractionalKernel kernel{alpha, make_scale(std::move(t), 0), {}, KernelMethod::uniform_GL};
  kernel.weights.assign(kernel.scale->size(), 0.0);
  double w = std::pow(h, -alpha);
  for (std::size_t k = 0; k < n_terms; ++k) {
    if (k > 0) w *= (static_cast<double>(k) - 1.0 - alpha) / static_cast<double>(k);
    kernel.weights[k] = w;
  }
  return kernel;
}

complex kernel_distinct(const TimeScale& ts, double alpha, std::size_t n) {
  const std::size_t t0 = ts.t0_index();
  if (n >= ts.size()) throw Error(ErrorCode::IndexOutOfRange, "kernel index outside window");
  if (n < t0) return 0.0;
  require_weight_index(ts, n);
  const std::vector<double> g = steps_after(ts, t0, n);
  const std::size_t k = n - t0;
  if (is_nonnegative_integer(alpha) && static_cast<double>(k) >= alpha + 1.0) return 0.0;
  return ts.step(n + 1) * divided_difference(g, static_cast<double>(k) - alpha - 1.0).value;
}

complex kernel_contour(const TimeScale& ts, double alpha, std::size_t n, std::size_t nodes) {
  const std::size_t t0 = ts.t0_index();
  if (n >= ts.size()) throw Error(ErrorCode::IndexOutOfRange, "kernel index outside window");
  if (n < t0) return 0.0;
  require_weight_index(ts, n);
  return ts.step(n + 1) * contour_delta(steps_after(ts, t0, n), alpha, nodes);
}

FractionalKernel fractional_kernel(ScalePtr ts, double alpha) {
  const std::size_t t0 = ts->t0_index();
  FractionalKernel kernel{alpha, ts, std::vector<complex>(ts->size(), 0.0), KernelMethod::uniform_GL};
  if (ts->is_uniform()) {
    const FractionalKernel gl = gl_kernel_uniform(alpha, ts->step(1), ts->size() - t0);
    for (std::size_t n = t0; n < ts->size(); ++n) kernel.weights[n] = gl.weights[n - t0];
    return kernel;
  }
  kernel.method = KernelMethod::distinct_residue;
  for (std::size_t n = t0; n < ts->last(); ++n) {
    const std::vector<double> g = steps_after(*ts, t0, n);
    kernel.weights[n] = ts->step(n + 1) * delta_value(g, alpha, kernel.method);
  }
  return kernel;
}

Signal fractional_derivative(const Signal& f, double alpha) {
  const TimeScale& ts = f.scale();
  if (f.is_zero()) return f;
  const IndexRange sup = *f.support();
  std::vector<complex> out(ts.size(), 0.0);

  if (ts.is_uniform()) {
    const FractionalKernel gl = gl_kernel_uniform(alpha, ts.step(1), ts.size());
    for (std::size_t n = sup.lo; n < ts.size(); ++n) {
      complex acc = 0.0;
      for (std::size_t m = sup.lo; m <= std::min(n, sup.hi); ++m) acc += gl.weights[n - m] * f[m];
      out[n] = acc;
    }
    return Signal::from_values(f.scale_ptr(), std::move(out));
  }

  if (sup.hi == ts.last()) {
    throw Error(ErrorCode::SupportTouchesBoundary, "support reaches the last instant");
  }
  KernelMethod used = KernelMethod::distinct_residue;
  for (std::size_t n = sup.lo; n < ts.last(); ++n) {
    complex acc = 0.0;
    for (std::size_t m = sup.lo; m <= std::min(n, sup.hi); ++m) {
      if (f[m] == 0.0) continue;
      const std::vector<double> g = steps_after(ts, m, n);
      acc += ts.step(m + 1) * f[m] * delta_value(g, alpha, used);
    }
    out[n] = acc;
  }
  return Signal::from_values(f.scale_ptr(), std::move(out));
}

Signal power_function(ScalePtr ts, int N) {
  if (N < 0) throw Error(ErrorCode::OrderZeroOrNegative, "power function degree must be >= 0");
  Signal p = unit_step(ts, StepFlavor::causal);
  if (N == 0) return p;
  if (ts->t0_index() == 0) {
    throw Error(ErrorCode::WindowTooSmall, "power functions need an instant before t0");
  }
  for (int k = 0; k < N; ++k) p = antiderivative(p, Direction::nabla);
  return p;
}

}  // namespace chronoscale
