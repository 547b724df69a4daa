#include "chronoscale/simd/kernels.hpp"

#include "lane_ops.hpp"

namespace chronoscale::simd::scalar {

using detail::Cx;

void apply_linear_factors(std::span<const double> g, double c, bool divide, ConstLanes s, Lanes p) {
  for (std::size_t l = 0; l < s.size(); ++l) {
    Cx acc{p.re[l], p.im[l]};
    for (double gk : g) {
      const Cx f = detail::linear_factor(c * gk, s.re[l], s.im[l]);
      acc = divide ? detail::div(acc, f) : detail::mul(acc, f);
    }
    p.re[l] = acc.re;
    p.im[l] = acc.im;
  }
}

void march_series(std::span<const double> g, std::span<const std::complex<double>> v, double c,
                  bool divide, ConstLanes s, Lanes acc) {
  for (std::size_t l = 0; l < s.size(); ++l) {
    Cx e{1.0, 0.0};
    Cx sum{acc.re[l], acc.im[l]};
    for (std::size_t j = 0; j < g.size(); ++j) {
      const Cx f = detail::linear_factor(c * g[j], s.re[l], s.im[l]);
      e = divide ? detail::div(e, f) : detail::mul(e, f);
      const Cx term = detail::mul(Cx{v[j].real(), v[j].imag()}, e);
      sum.re = sum.re + term.re;
      sum.im = sum.im + term.im;
    }
    acc.re[l] = sum.re;
    acc.im[l] = sum.im;
  }
}

void multiply(ConstLanes a, ConstLanes b, Lanes out) {
  for (std::size_t l = 0; l < a.size(); ++l) {
    const Cx r = detail::mul({a.re[l], a.im[l]}, {b.re[l], b.im[l]});
    out.re[l] = r.re;
    out.im[l] = r.im;
  }
}

}  // namespace chronoscale::simd::scalar
