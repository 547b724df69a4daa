#pragma once

#include "chronoscale/signal.hpp"

namespace chronoscale {

/// Order-N nabla or delta derivative.
///
/// Nabla: g(t_n) = (f(t_n) - f(t_{n-1})) / nu_n, iterated N times; the result
/// is computable for n >= N. Delta mirrors with (f(t_{n+1}) - f(t_n)) / mu_n
/// and n <= last - N. Indices where the stencil leaves the window are left
/// outside the result support instead of being filled in.
///
/// Throws OrderZeroOrNegative for order < 1 and WindowTooSmall when no index
/// is computable.
Signal derivative(const Signal& f, Direction dir, int order = 1);

/// Causal (nabla) or anti-causal (delta) anti-derivative:
///   nabla: F(t_n) = sum_{m <= n} nu_m f(t_m)
///   delta: F(t_n) = -sum_{m >= n} mu_m f(t_m)
/// Throws SupportTouchesBoundary when the support reaches the edge the sum
/// starts from.
Signal antiderivative(const Signal& f, Direction dir);

/// Nabla: sum over a < n <= b of nu_n f(t_n). Delta: sum over a <= n < b of
/// mu_n f(t_n). Throws ReversedInterval if a > b.
complex definite_integral(const Signal& f, std::size_t a, std::size_t b, Direction dir);

}  // namespace chronoscale
