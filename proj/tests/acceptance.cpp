#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "chronoscale/calculus.hpp"
#include "chronoscale/error.hpp"
#include "chronoscale/exponential.hpp"
#include "chronoscale/fractional.hpp"
#include "chronoscale/systems.hpp"
#include "chronoscale/transform.hpp"
#include "support.hpp"

using namespace chronoscale;
using testing_support::complex;
using testing_support::hz;
using testing_support::random_complex;
using testing_support::random_scale;
using testing_support::random_signal;
using testing_support::rel_err;

namespace {

struct Outcome {
  double metric = 0.0;
  bool pass = false;
  std::string detail;
};

double scaled_err(complex got, complex want) { return std::abs(got - want) / std::max(1.0, std::abs(want)); }

Outcome within(double metric, double tol, std::string detail = {}) {
  return {metric, metric <= tol, std::move(detail)};
}

Outcome eigenfunction() {
  auto gen = testing_support::rng(101);
  const auto ts = random_scale(gen, 64, 20, 0.1, 2.0);
  double worst = 0.0;
  int used = 0;
  while (used < 20) {
    const complex s = random_complex(gen, 1.5);
    bool near_pole = false;
    for (std::size_t j = 1; j < ts->size(); ++j) near_pole |= std::abs(1.0 - s * ts->step(j)) < 1e-3;
    if (near_pole) continue;
    ++used;
    std::vector<complex> e(ts->size());
    for (std::size_t n = 0; n < ts->size(); ++n) e[n] = exp(*ts, n, ts->t0_index(), s, Direction::nabla);
    const Signal d = derivative(Signal::from_values(ts, e), Direction::nabla);
    for (std::size_t n = 1; n < ts->last(); ++n) worst = std::max(worst, rel_err(d[n], s * e[n]));
  }
  return within(worst, 1e-12);
}

Outcome inversion() {
  auto gen = testing_support::rng(102);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto ts = random_scale(gen, 40, 12, 0.05, 2.0);
    const Signal f = random_signal(gen, ts, 5, 34);
    for (Direction dir : {Direction::nabla, Direction::delta}) {
      const Signal back = derivative(antiderivative(f, dir), dir);
      for (std::size_t n = 5; n <= 34; ++n) worst = std::max(worst, rel_err(back[n], f[n]));
    }
  }
  return within(worst, 1e-13);
}

Outcome z_transform() {
  const double h = 0.25;
  const auto ts = hz(h, -4, 40);
  auto gen = testing_support::rng(103);
  const Signal f = random_signal(gen, ts, 4, 35);
  double worst = 0.0;
  for (int k = 0; k < 10; ++k) {
    const complex s = random_complex(gen, 1.0);
    const complex z = 1.0 / (1.0 - s * h);
    complex sum = 0.0;
    for (std::size_t n = 4; n <= 35; ++n) sum += f[n] * std::pow(z, -static_cast<double>(n - 4));
    worst = std::max(worst, rel_err(direct_transform(f, s, Direction::nabla) / h, sum));
  }
  return within(worst, 1e-12);
}

Outcome continuum() {
  double lo = 1e300;
  double hi = 0.0;
  for (complex s : {complex(1.0), complex(-0.5), complex(0.3, 0.4)}) {
    double prev = 0.0;
    for (int k = 3; k <= 10; ++k) {
      const auto ts = hz(std::ldexp(1.0, -k), 0, 1L << k);
      const double err = std::abs(exp(*ts, ts->last(), 0, s, Direction::nabla) - std::exp(s));
      if (k > 3) {
        lo = std::min(lo, prev / err);
        hi = std::max(hi, prev / err);
      }
      prev = err;
    }
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "ratios in [%.4f, %.4f]", lo, hi);
  return {std::max(2.0 - lo, hi - 2.0), lo >= 1.7 && hi <= 2.3, buf};
}

Outcome round_trip() {
  auto gen = testing_support::rng(105);
  const auto ts = random_scale(gen, 16, 5, 0.5, 1.5);
  const Signal f = random_signal(gen, ts, 1, 14);
  double worst = 0.0;
  for (Direction kind : {Direction::nabla, Direction::delta}) {
    const Contour c = default_contour(*ts, kind, {}, 4096);
    const auto back = contour_inverse_all([&](complex s) { return direct_transform(f, s, kind); }, *ts, c, kind);
    for (std::size_t n = 1; n < ts->last(); ++n) worst = std::max(worst, std::abs(back[n] - f[n]));
  }
  return within(worst, 1e-8);
}

Outcome catalog_vs_contour() {
  auto gen = testing_support::rng(106);
  const auto ts = random_scale(gen, 16, 5, 0.5, 1.5);
  std::uniform_real_distribution<double> re(-3.0, -0.05);
  std::uniform_real_distribution<double> im(-2.0, 2.0);
  double worst = 0.0;
  for (int k = 0; k < 10; ++k) {
    const RationalTransform h = RationalTransform::from_poles({1.0}, {Pole{{re(gen), im(gen)}, 1, Roc::causal}});
    const PoleSides sides = pole_sides(h);
    const Contour c = default_contour(*ts, Direction::nabla, sides);
    const auto oracle = contour_inverse_all([&](complex s) { return h(s); }, *ts, c, Direction::nabla, sides);
    const Signal f = invert_rational(h, ts);
    for (std::size_t n = 0; n < ts->size(); ++n) worst = std::max(worst, std::abs(f[n] - oracle[n]));
  }
  return within(worst, 1e-8);
}

RationalTransform random_stable(std::mt19937_64& gen, int N) {
  std::uniform_real_distribution<double> re(0.2, 3.0);
  std::uniform_real_distribution<double> im(-1.0, 1.0);
  std::vector<Pole> poles;
  for (int k = 0; k < N; ++k) poles.push_back(Pole{{-re(gen), im(gen)}, 1, Roc::causal});
  std::vector<complex> num;
  for (int k = 0; k < N; ++k) num.push_back(random_complex(gen));
  return RationalTransform::from_poles(num, poles);
}

double simulation_gap(const RationalTransform& H, const ScalePtr& ts) {
  const Signal cat = impulse_response(H, ts);
  const Simulation sim = simulate(H.den, H.num, impulse(ts));
  double worst = 0.0;
  for (std::size_t n = ts->t0_index(); n < ts->last(); ++n) worst = std::max(worst, scaled_err(sim.y[n], cat[n]));
  return worst;
}

Outcome simulation() {
  auto gen = testing_support::rng(107);
  double worst = 0.0;
  double uniform = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const int N = 1 + trial % 4;
    const RationalTransform H = random_stable(gen, N);
    worst = std::max(worst, simulation_gap(H, random_scale(gen, 70, 5, 0.1, 1.0)));
    const double h = std::uniform_real_distribution<double>(0.1, 1.0)(gen);
    uniform = std::max(uniform, simulation_gap(H, hz(h, -5, 64)));
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "uniform scales %.3g", uniform);
  return {worst, worst <= 1e-9, buf};
}

Outcome derivative_rule() {
  const auto ts = hz(0.5, -5, 30);
  auto gen = testing_support::rng(108);
  const Signal f = random_signal(gen, ts, 10, 25);
  double worst = 0.0;
  for (int N = 1; N <= 3; ++N) {
    const Signal d = Signal::from_values(ts, derivative(f, Direction::nabla, N).values());
    for (int k = 0; k < 5; ++k) {
      const complex s = random_complex(gen, 1.0);
      const complex want = std::pow(s, N) * direct_transform(f, s, Direction::nabla);
      worst = std::max(worst, scaled_err(direct_transform(d, s, Direction::nabla), want));
    }
  }
  return within(worst, 1e-10);
}

Outcome gl_kernel() {
  const FractionalKernel k = gl_kernel_uniform(0.5, 1.0, 30);
  const bool exact = k.weights[0] == 1.0 && k.weights[1] == -0.5 && k.weights[2] == -0.125 &&
                     k.weights[3] == -0.0625;
  auto gen = testing_support::rng(109);
  std::uniform_real_distribution<double> delta(-1.0, 1.0);
  std::vector<double> t{0.0};
  for (int j = 1; j < 40; ++j) t.push_back(t.back() + 1.0 + 1e-6 * delta(gen));
  const std::size_t t0 = 5;
  const double shift = t[t0];
  for (double& x : t) x -= shift;
  const auto ts = make_scale(t, t0);
  double worst = 0.0;
  for (std::size_t j = 0; j < 30; ++j) worst = std::max(worst, std::abs(kernel_distinct(*ts, 0.5, t0 + j) - k.weights[j]));
  return {worst, exact && worst <= 1e-4, exact ? "recurrence exact" : "recurrence NOT exact"};
}

Outcome powers() {
  const auto ts = hz(1.0, -3, 40);
  const Signal p1 = power_function(ts, 1);
  const Signal p2 = power_function(ts, 2);
  double worst = 0.0;
  for (std::size_t i = 3; i < ts->size(); ++i) {
    const double n = static_cast<double>(i - 3);
    worst = std::max(worst, std::abs(p1[i] - (n + 1.0)));
    worst = std::max(worst, std::abs(p2[i] - (n + 1.0) * (n + 2.0) / 2.0));
  }
  return {worst, worst == 0.0, {}};
}

Outcome resampling() {
  const auto ts = hz(0.5, -6, 10);
  auto gen = testing_support::rng(111);
  const Signal f = random_signal(gen, ts, 2, 12);
  double worst = 0.0;
  const Signal r = resample_uniform(f, 0.5);
  for (std::size_t n = 0; n < f.size(); ++n) worst = std::max(worst, std::abs(r[n] - f[n]));
  ResampleOptions opts;
  opts.interp.grid_shortcut = false;
  const Signal q = resample_uniform(f, 0.5, opts);
  double contour = 0.0;
  for (std::size_t n = 0; n < ts->last(); ++n) contour = std::max(contour, std::abs(q[n] - f[n]));
  char buf[64];
  std::snprintf(buf, sizeof buf, "shortcut %.3g, contour %.3g", worst, contour);
  return {std::max(worst, contour), std::max(worst, contour) <= 1e-8, buf};
}

Outcome shift_property() {
  const auto ts = hz(0.5, -10, 30);
  auto gen = testing_support::rng(112);
  const Signal f = random_signal(gen, ts, 8, 20);
  const std::size_t m = 14;
  std::vector<complex> v(ts->size(), 0.0);
  for (std::size_t n = m - 10; n < ts->size(); ++n) v[n] = f[n - m + 10];
  const Signal g = Signal::from_values(ts, v);
  double worst = 0.0;
  for (int k = 0; k < 10; ++k) {
    const complex s = random_complex(gen, 1.0);
    const complex want = shifted_transform_factor(*ts, m, s) * direct_transform(f, s, Direction::nabla);
    worst = std::max(worst, scaled_err(direct_transform(g, s, Direction::nabla), want));
  }
  return within(worst, 1e-10);
}

Outcome final_value() {
  auto gen = testing_support::rng(113);
  double worst = 0.0;
  for (int trial = 0; trial < 5; ++trial) {
    const auto ts = trial == 0 ? hz(0.5, -4, 30) : random_scale(gen, 30, 4, 0.2, 1.5);
    const Signal g = random_signal(gen, ts, 4, 25);
    complex total = 0.0;
    for (std::size_t n = 4; n <= 25; ++n) total += ts->graininess(n, Direction::delta) * g[n];
    worst = std::max(worst, rel_err(direct_transform(g, complex(1e-9), Direction::nabla), total));
  }
  return within(worst, 1e-6);
}

Outcome convolution() {
  const auto ts = hz(1.0, -5, 60);
  auto gen = testing_support::rng(114);
  const Signal f = random_signal(gen, ts, 5, 15);
  const Signal g = random_signal(gen, ts, 6, 14);
  const Signal fg = convolve(f, g);
  double worst = 0.0;
  for (int i = 0; i < 5; ++i) {
    const complex s = random_complex(gen, 0.5);
    const complex want = direct_transform(f, s, Direction::nabla) * direct_transform(g, s, Direction::nabla);
    worst = std::max(worst, scaled_err(direct_transform(fg, s, Direction::nabla), want));
  }
  double identity = 0.0;
  for (int trial = 0; trial < 5; ++trial) {
    const auto rs = random_scale(gen, 20, 6, 0.2, 2.0);
    const Signal x = random_signal(gen, rs, 3, 15);
    const Signal c = convolve(x, impulse(rs), ConvolveOptions{true});
    for (std::size_t n = 0; n < rs->size(); ++n) identity = std::max(identity, std::abs(c[n] - x[n]));
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "f*impulse deviation %.3g", identity);
  return {worst, worst <= 1e-10 && identity == 0.0, buf};
}

struct Criterion {
  const char* name;
  const char* tol;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> all = {
      {"eigenfunction identity", "1e-12", eigenfunction},
      {"derivative/antiderivative inversion", "1e-13", inversion},
      {"Z-transform compatibility", "1e-12", z_transform},
      {"continuum limit", "ratios in [1.7, 2.3]", continuum},
      {"transform round trip", "1e-8", round_trip},
      {"catalog vs contour", "1e-8", catalog_vs_contour},
      {"simulation vs catalog", "1e-9", simulation},
      {"derivative rule", "1e-10", derivative_rule},
      {"GL kernel values", "exact; 1e-4", gl_kernel},
      {"power functions", "exact", powers},
      {"resampling identity", "1e-8", resampling},
      {"shift property", "1e-10", shift_property},
      {"final value theorem", "1e-6", final_value},
      {"convolution transform property", "1e-10; exact", convolution},
  };
  int failed = 0;
  for (std::size_t i = 0; i < all.size(); ++i) {
    Outcome o;
    try {
      o = all[i].run();
    } catch (const Error& e) {
      o = {NAN, false, e.what()};
    }
    failed += o.pass ? 0 : 1;
    std::printf("[%s] %2zu %s: %.3g (tol %s)%s%s\n", o.pass ? "PASS" : "FAIL", i + 1, all[i].name, o.metric,
                all[i].tol, o.detail.empty() ? "" : "; ", o.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(all.size()) - failed, all.size());
  return failed == 0 ? 0 : 1;
}
