// AVX2 variants: four lanes per register, split re/im. Operation order mirrors
// the scalar reference.

#include <immintrin.h>

#include "chronoscale/simd/kernels.hpp"
#include "lane_ops.hpp"

namespace chronoscale::simd::avx2 {

namespace {

struct V {
  __m256d re;
  __m256d im;
};

inline V vmul(V a, V b) {
  return {_mm256_sub_pd(_mm256_mul_pd(a.re, b.re), _mm256_mul_pd(a.im, b.im)),
          _mm256_add_pd(_mm256_mul_pd(a.re, b.im), _mm256_mul_pd(a.im, b.re))};
}

inline V vdiv(V a, V b) {
  const __m256d d = _mm256_add_pd(_mm256_mul_pd(b.re, b.re), _mm256_mul_pd(b.im, b.im));
  return {_mm256_div_pd(_mm256_add_pd(_mm256_mul_pd(a.re, b.re), _mm256_mul_pd(a.im, b.im)), d),
          _mm256_div_pd(_mm256_sub_pd(_mm256_mul_pd(a.im, b.re), _mm256_mul_pd(a.re, b.im)), d)};
}

inline V vfactor(double cg, __m256d s_re, __m256d s_im) {
  const __m256d k = _mm256_set1_pd(cg);
  return {_mm256_add_pd(_mm256_set1_pd(1.0), _mm256_mul_pd(k, s_re)), _mm256_mul_pd(k, s_im)};
}

constexpr std::size_t kWidth = 4;

}  // namespace

void apply_linear_factors(std::span<const double> g, double c, bool divide, ConstLanes s, Lanes p) {
  const std::size_t n = s.size();
  std::size_t l = 0;
  for (; l + kWidth <= n; l += kWidth) {
    const __m256d s_re = _mm256_loadu_pd(&s.re[l]);
    const __m256d s_im = _mm256_loadu_pd(&s.im[l]);
    V acc{_mm256_loadu_pd(&p.re[l]), _mm256_loadu_pd(&p.im[l])};
    for (double gk : g) {
      const V f = vfactor(c * gk, s_re, s_im);
      acc = divide ? vdiv(acc, f) : vmul(acc, f);
    }
    _mm256_storeu_pd(&p.re[l], acc.re);
    _mm256_storeu_pd(&p.im[l], acc.im);
  }
  if (l < n) {
    scalar::apply_linear_factors(g, c, divide, {s.re.subspan(l), s.im.subspan(l)},
                                 {p.re.subspan(l), p.im.subspan(l)});
  }
}

void march_series(std::span<const double> g, std::span<const std::complex<double>> v, double c,
                  bool divide, ConstLanes s, Lanes acc) {
  const std::size_t n = s.size();
  std::size_t l = 0;
  for (; l + kWidth <= n; l += kWidth) {
    const __m256d s_re = _mm256_loadu_pd(&s.re[l]);
    const __m256d s_im = _mm256_loadu_pd(&s.im[l]);
    V e{_mm256_set1_pd(1.0), _mm256_setzero_pd()};
    V sum{_mm256_loadu_pd(&acc.re[l]), _mm256_loadu_pd(&acc.im[l])};
    for (std::size_t j = 0; j < g.size(); ++j) {
      const V f = vfactor(c * g[j], s_re, s_im);
      e = divide ? vdiv(e, f) : vmul(e, f);
      const V term = vmul(V{_mm256_set1_pd(v[j].real()), _mm256_set1_pd(v[j].imag())}, e);
      sum.re = _mm256_add_pd(sum.re, term.re);
      sum.im = _mm256_add_pd(sum.im, term.im);
    }
    _mm256_storeu_pd(&acc.re[l], sum.re);
    _mm256_storeu_pd(&acc.im[l], sum.im);
  }
  if (l < n) {
    scalar::march_series(g, v, c, divide, {s.re.subspan(l), s.im.subspan(l)},
                         {acc.re.subspan(l), acc.im.subspan(l)});
  }
}

void multiply(ConstLanes a, ConstLanes b, Lanes out) {
  const std::size_t n = a.size();
  std::size_t l = 0;
  for (; l + kWidth <= n; l += kWidth) {
    const V r = vmul({_mm256_loadu_pd(&a.re[l]), _mm256_loadu_pd(&a.im[l])},
                     {_mm256_loadu_pd(&b.re[l]), _mm256_loadu_pd(&b.im[l])});
    _mm256_storeu_pd(&out.re[l], r.re);
    _mm256_storeu_pd(&out.im[l], r.im);
  }
  if (l < n) {
    scalar::multiply({a.re.subspan(l), a.im.subspan(l)}, {b.re.subspan(l), b.im.subspan(l)},
                     {out.re.subspan(l), out.im.subspan(l)});
  }
}

}  // namespace chronoscale::simd::avx2
