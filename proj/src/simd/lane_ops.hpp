#pragma once

// Single-lane operations shared by the scalar kernels and the vector tails.
// The operation order here is the reference every vector path reproduces.

namespace chronoscale::simd::detail {

struct Cx {
  double re;
  double im;
};

inline Cx mul(Cx a, Cx b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

// a / b without rescaling; operands stay far from the overflow range in use.
inline Cx div(Cx a, Cx b) {
  const double d = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

// 1 + c*g*s
inline Cx linear_factor(double cg, double s_re, double s_im) {
  return {1.0 + cg * s_re, cg * s_im};
}

}  // namespace chronoscale::simd::detail
