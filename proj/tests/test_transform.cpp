#include <cmath>

#include "chronoscale/calculus.hpp"
#include "chronoscale/error.hpp"
#include "chronoscale/exponential.hpp"
#include "chronoscale/transform.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace chronoscale;
using testing_support::complex;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::ParseError;
}

RationalTransform simple_pole(complex p, Roc roc, int mult = 1) {
  return RationalTransform::from_poles({1.0}, {Pole{p, mult, roc}});
}

}  // namespace

TEST_SUITE("transform") {
  TEST_CASE("impulse") {
    const auto u = testing_support::hz(1.0, -3, 3);
    const Signal a = impulse(u);
    CHECK(a[3] == complex(1.0));
    CHECK(a.support() == IndexRange{3, 3});

    const auto ts = make_scale({0.0, 0.5, 1.5}, 0);
    CHECK(impulse(ts)[0] == complex(2.0));
    CHECK(code_of([] { (void)impulse(make_scale({-1.0, 0.0}, 1)); }) == ErrorCode::BoundaryIndex);

    auto gen = testing_support::rng(1);
    const auto r = testing_support::random_scale(gen, 12, 5, 0.1, 2.0);
    const Signal d = impulse(r);
    for (int k = 0; k < 5; ++k) {
      const complex s = testing_support::random_complex(gen, 3.0);
      CHECK(testing_support::rel_err(direct_transform(d, s, Direction::nabla), 1.0) < 1e-15);
    }
  }

  TEST_CASE("unit steps") {
    const auto ts = make_scale({-1.0, 0.0, 1.0}, 1);
    const Signal c = unit_step(ts, StepFlavor::causal);
    const Signal a = unit_step(ts, StepFlavor::anticausal);
    CHECK(c.values() == std::vector<complex>{0.0, 1.0, 1.0});
    CHECK(a.values() == std::vector<complex>{-1.0, 0.0, 0.0});
  }

  TEST_CASE("zero signal transforms to zero") {
    const auto ts = testing_support::hz(0.5, -4, 4);
    const Signal z = Signal::zero(ts);
    for (Direction k : {Direction::nabla, Direction::delta}) {
      CHECK(direct_transform(z, complex(0.3, 0.2), k) == complex(0.0));
    }
  }

  TEST_CASE("hand-evaluated series") {
    const auto ts = make_scale({0.0, 0.5, 1.5, 2.0}, 0);
    const Signal f = Signal::from_values(ts, {1.0, 2.0, 0.0, 0.0});
    const complex s(0.25);
    // mu_0 f_0 + mu_1 f_1 (1 - s*0.5)
    CHECK(direct_transform(f, s, Direction::nabla).real() == doctest::Approx(0.5 + 1.0 * 2.0 * 0.875));
    const Signal g = Signal::from_values(ts, {0.0, 2.0, 1.0, 0.0});
    // nu_1 g_1 / (1 + s*0.5) + nu_2 g_2 / ((1 + s*0.5)(1 + s*1))
    CHECK(direct_transform(g, s, Direction::delta).real() ==
          doctest::Approx(0.5 * 2.0 / 1.125 + 1.0 / (1.125 * 1.25)));
  }

  TEST_CASE("support at the undefined weight") {
    const auto ts = testing_support::hz(1.0, 0, 3);
    const Signal right = Signal::from_values(ts, {0.0, 0.0, 0.0, 1.0});
    const Signal left = Signal::from_values(ts, {1.0, 0.0, 0.0, 0.0});
    CHECK(code_of([&] { (void)direct_transform(right, 0.1, Direction::nabla); }) ==
          ErrorCode::SupportTouchesBoundary);
    CHECK(code_of([&] { (void)direct_transform(left, 0.1, Direction::delta); }) ==
          ErrorCode::SupportTouchesBoundary);
  }

  TEST_CASE("pole hit on hZ") {
    const auto ts = testing_support::hz(0.5, -3, 3);
    const Signal f = Signal::from_values(ts, {1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0});
    CHECK(code_of([&] { (void)direct_transform(f, 2.0, Direction::nabla); }) == ErrorCode::PoleHit);
  }

  TEST_CASE("grid overload agrees with the scalar evaluation") {
    auto gen = testing_support::rng(2);
    const auto ts = testing_support::random_scale(gen, 40, 12, 0.1, 1.5);
    const Signal f = testing_support::random_signal(gen, ts, 3, 30);
    std::vector<complex> grid;
    for (int k = 0; k < 37; ++k) grid.push_back(testing_support::random_complex(gen, 0.8));
    for (Direction kind : {Direction::nabla, Direction::delta}) {
      const std::vector<complex> F = direct_transform(f, grid, kind);
      for (std::size_t k = 0; k < grid.size(); ++k) {
        CHECK(testing_support::rel_err(F[k], direct_transform(f, grid[k], kind)) < 1e-12);
      }
    }
  }

  TEST_CASE("classical Z transform on hZ") {
    const double h = 0.25;
    const auto ts = testing_support::hz(h, -4, 40);
    auto gen = testing_support::rng(3);
    const Signal f = testing_support::random_signal(gen, ts, 4, 35);
    for (int k = 0; k < 10; ++k) {
      const complex s = testing_support::random_complex(gen, 1.0);
      const complex z = 1.0 / (1.0 - s * h);
      complex zsum = 0.0;
      for (std::size_t n = 4; n <= 35; ++n) zsum += f[n] * std::pow(z, -static_cast<double>(n - 4));
      CHECK(testing_support::rel_err(direct_transform(f, s, Direction::nabla) / h, zsum) < 1e-12);
    }
  }

  TEST_CASE("derivative rule on hZ") {
    const auto ts = testing_support::hz(0.5, -5, 30);
    auto gen = testing_support::rng(4);
    const Signal f = testing_support::random_signal(gen, ts, 10, 25);
    for (int N = 1; N <= 3; ++N) {
      const Signal d = derivative(f, Direction::nabla, N);
      std::vector<complex> v(d.values());
      // Zero-padded stencil: the derivative of a finite-support signal is
      // itself finite support one sample wider per order.
      const Signal dz = Signal::from_values(ts, v);
      for (int k = 0; k < 5; ++k) {
        const complex s = testing_support::random_complex(gen, 1.0);
        const complex lhs = direct_transform(dz, s, Direction::nabla);
        const complex rhs = std::pow(s, N) * direct_transform(f, s, Direction::nabla);
        CHECK(std::abs(lhs - rhs) <= 1e-10 * std::max(1.0, std::abs(rhs)));
      }
    }
  }

  TEST_CASE("dilating the scale") {
    auto gen = testing_support::rng(5);
    const auto ts = testing_support::random_scale(gen, 20, 6, 0.2, 1.0);
    const Signal f = testing_support::random_signal(gen, ts, 2, 15);
    for (double a : {0.5, 3.0}) {
      const auto as = share(ts->scaled(a));
      const Signal g(as, f.values(), f.support());
      for (int k = 0; k < 5; ++k) {
        const complex s = testing_support::random_complex(gen, 0.5);
        CHECK(testing_support::rel_err(direct_transform(g, s, Direction::nabla),
                                       a * direct_transform(f, a * s, Direction::nabla)) < 1e-12);
      }
    }
  }

  TEST_CASE("modulation on hZ") {
    const double h = 0.5;
    const auto ts = testing_support::hz(h, -2, 24);
    auto gen = testing_support::rng(6);
    const Signal f = testing_support::random_signal(gen, ts, 2, 20);
    const complex s0(0.3, -0.2);
    std::vector<complex> v(f.values());
    for (std::size_t n = 0; n < v.size(); ++n) v[n] *= exp(*ts, n, ts->t0_index(), s0, Direction::nabla);
    const Signal g = Signal::from_values(ts, v);
    for (int k = 0; k < 8; ++k) {
      const complex s = testing_support::random_complex(gen, 0.8);
      const complex shifted = (s - s0) / (1.0 - s0 * h);
      CHECK(testing_support::rel_err(direct_transform(g, s, Direction::nabla),
                                     direct_transform(f, shifted, Direction::nabla)) < 1e-10);
    }
  }

  TEST_CASE("catalog spot values") {
    const auto ts = testing_support::hz(1.0, -5, 20);
    const Signal f = invert_rational(simple_pole(-1.0, Roc::causal), ts);
    for (std::size_t n = 0; n < ts->last(); ++n) {
      const double want = n >= 5 ? std::ldexp(1.0, -static_cast<int>(n - 5 + 1)) : 0.0;
      CHECK(f[n] == complex(want));
    }
    CHECK(f[ts->last()] == complex(0.0));

    const Signal step = invert_rational(simple_pole(0.0, Roc::causal), ts);
    for (std::size_t n = 0; n < ts->last(); ++n) CHECK(step[n] == complex(n >= 5 ? 1.0 : 0.0));
  }

  TEST_CASE("anticausal catalog against the geometric series") {
    const auto ts = testing_support::hz(1.0, -80, 3);
    const complex p(0.5);
    const Signal f = invert_rational(simple_pole(p, Roc::anticausal), ts);
    for (std::size_t n = 80; n <= ts->last(); ++n) CHECK(f[n] == complex(0.0));
    // |1 - p h| < |1 - s h|: the two-sided series converges to 1/(s - p).
    for (complex s : {complex(-1.0, 1.0), complex(-0.5, -2.0), complex(3.0, 0.5)}) {
      CHECK(testing_support::rel_err(direct_transform(f, s, Direction::nabla), 1.0 / (s - p)) < 1e-12);
    }
  }

  TEST_CASE("catalog transforms back to the rational") {
    auto gen = testing_support::rng(7);
    const auto ts = testing_support::random_scale(gen, 400, 3, 0.5, 1.0);
    for (int mult = 1; mult <= 3; ++mult) {
      const complex p(-1.5, 0.4);
      const Signal g = invert_rational(simple_pole(p, Roc::causal, mult), ts);
      for (complex s : {complex(0.2, 0.1), complex(-0.3), complex(0.1, -0.4)}) {
        CHECK(testing_support::rel_err(direct_transform(g, s, Direction::nabla),
                                       std::pow(s - p, -mult)) < 1e-10);
      }
    }
  }

  TEST_CASE("catalog errors") {
    const auto ts = testing_support::hz(0.5, -3, 5);
    const RationalTransform improper = RationalTransform::from_poles({0.0, 1.0}, {Pole{-1.0, 1, Roc::causal}});
    CHECK(code_of([&] { (void)invert_rational(improper, ts); }) == ErrorCode::ImproperRational);
    CHECK(code_of([&] { (void)invert_rational(simple_pole(-1.0, Roc::untagged), ts); }) ==
          ErrorCode::UntaggedPole);
    CHECK(code_of([&] { (void)invert_rational(simple_pole(2.0, Roc::causal), ts); }) ==
          ErrorCode::PoleOnScale);
  }

  TEST_CASE("contour inverse of the constant one") {
    auto gen = testing_support::rng(8);
    const auto ts = testing_support::random_scale(gen, 12, 5, 0.3, 1.5);
    const Contour c = default_contour(*ts, Direction::nabla);
    const TransformFn one = [](complex) { return complex(1.0); };
    for (std::size_t n = 0; n < ts->last(); ++n) {
      const complex v = contour_inverse(one, *ts, n, c, Direction::nabla);
      const double want = n == 5 ? 1.0 / ts->step(6) : 0.0;
      CHECK(std::abs(v - want) < 1e-9);
    }
    CHECK(code_of([&] { (void)contour_inverse(one, *ts, ts->last(), c, Direction::nabla); }) ==
          ErrorCode::IndexOutOfRange);
  }

  TEST_CASE("contour round trip, both kinds") {
    auto gen = testing_support::rng(9);
    for (int trial = 0; trial < 5; ++trial) {
      const auto ts = testing_support::random_scale(gen, 16, 6, 0.5, 1.5);
      const Signal f = testing_support::random_signal(gen, ts, 2, 13);
      for (Direction kind : {Direction::nabla, Direction::delta}) {
        const Contour c = default_contour(*ts, kind);
        const std::vector<complex> back = contour_inverse_all(
            [&](complex s) { return direct_transform(f, s, kind); }, *ts, c, kind);
        for (std::size_t n = 1; n < ts->last(); ++n) CHECK(std::abs(back[n] - f[n]) < 1e-8);
      }
    }
  }

  TEST_CASE("catalog against the contour oracle") {
    auto gen = testing_support::rng(10);
    const auto ts = testing_support::random_scale(gen, 16, 5, 0.5, 1.5);
    for (Roc roc : {Roc::causal, Roc::anticausal}) {
      for (int mult = 1; mult <= 2; ++mult) {
        const complex p = roc == Roc::causal ? complex(-0.8, 0.6) : complex(0.2, 0.1);
        const RationalTransform h = simple_pole(p, roc, mult);
        const PoleSides sides = pole_sides(h);
        const Contour c = default_contour(*ts, Direction::nabla, sides);
        const std::vector<complex> oracle =
            contour_inverse_all([&](complex s) { return h(s); }, *ts, c, Direction::nabla, sides);
        const Signal f = invert_rational(h, ts);
        for (std::size_t n = 0; n < ts->size(); ++n) CHECK(std::abs(f[n] - oracle[n]) < 1e-8);
      }
    }
  }

  TEST_CASE("pole sides") {
    const RationalTransform h = RationalTransform::from_poles(
        {1.0}, {Pole{-1.0, 1, Roc::causal}, Pole{0.5, 2, Roc::anticausal}});
    const PoleSides sides = pole_sides(h);
    CHECK(sides.enclosed == std::vector<complex>{0.5});
    CHECK(sides.excluded == std::vector<complex>{-1.0});
  }
}
