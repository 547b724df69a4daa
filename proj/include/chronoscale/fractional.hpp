#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "chronoscale/contour.hpp"
#include "chronoscale/signal.hpp"

namespace chronoscale {

enum class KernelMethod { uniform_GL, distinct_residue, contour };

std::string_view kernel_method_name(KernelMethod m) noexcept;

/// Causal fractional-derivative weights aligned to a scale: weights[n] is the
/// coefficient of f(t_m) in the derivative at t_{m + (n - t0)} on uniform
/// scales, h^-alpha (-alpha)_k / k! with k = n - t0. Zero before t0.
struct FractionalKernel {
  double alpha = 0.0;
  ScalePtr scale;
  std::vector<complex> weights;
  KernelMethod method = KernelMethod::uniform_GL;
};

/// w_0 = h^-alpha, w_k = w_{k-1} (k - 1 - alpha) / k on the grid {k h}.
/// Throws InvalidStep for h <= 0 and TooShort for n_terms < 1.
FractionalKernel gl_kernel_uniform(double alpha, double h, std::size_t n_terms);

/// Kernel value at t_n referenced at t0, from the steps g_1..g_{k+1} that
/// follow t0 (k = n - t0):
///   delta = sum_i g_i^(k - alpha - 1) prod_{j != i} 1 / (g_i - g_j),
/// the divided difference of x^(k - alpha - 1). Returned as the weight
/// g_{k+1} * delta, which is the GL weight on uniform scales.
///
/// Tightly clustered steps are evaluated by a series about their mean, so
/// nearly equal steps are accurate. Otherwise the steps must be pairwise
/// separated by 1e-6 relative, else RepeatedGraininess. Zero for n < t0.
complex kernel_distinct(const TimeScale& ts, double alpha, std::size_t n);

/// Same weight by trapezoidal quadrature of
///   -(1/2 pi i) \oint s^alpha prod (1 - s g)^-1 ds
/// on a circle enclosing the 1/g and excluding the branch point 0.
complex kernel_contour(const TimeScale& ts, double alpha, std::size_t n,
                       std::size_t nodes = kDefaultNodes);

/// Weights for every index of the window: GL on uniform scales, otherwise the
/// divided-difference value with contour quadrature where it is unavailable.
/// The last index has no following step and is zero.
FractionalKernel fractional_kernel(ScalePtr ts, double alpha);

/// D^alpha f(t_n) = sum_{m <= n} mu_m f(t_m) K(m, n), where K(m, n) is the
/// kernel referenced at t_m. On uniform scales this is the GL sum
/// sum_m w_{n-m} f(t_m). Throws SupportTouchesBoundary when the support
/// reaches the last index on a nonuniform scale.
Signal fractional_derivative(const Signal& f, double alpha);

/// N-fold nabla antiderivative of the causal unit step; h^N (N+k)!/(N! k!)
/// on uniform scales. N = 0 is the step. Throws WindowTooSmall when N >= 1
/// and t0 is the first instant.
Signal power_function(ScalePtr ts, int N);

namespace detail {
/// Divided difference of x^beta over the given nodes.
double divided_difference_power(std::span<const double> x, double beta);
}  // namespace detail

}  // namespace chronoscale
