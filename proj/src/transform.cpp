#include "chronoscale/transform.hpp"

#include <cmath>
#include <sstream>

#include "chronoscale/error.hpp"
#include "chronoscale/exponential.hpp"
#include "chronoscale/simd/kernels.hpp"
#include "chronoscale/summation.hpp"

namespace chronoscale {

namespace {

struct SplitLanes {
  std::vector<double> re;
  std::vector<double> im;

  explicit SplitLanes(std::size_t n, double fill_re = 0.0) : re(n, fill_re), im(n, 0.0) {}
  explicit SplitLanes(std::span<const complex> z) : re(z.size()), im(z.size()) {
    for (std::size_t k = 0; k < z.size(); ++k) {
      re[k] = z[k].real();
      im[k] = z[k].imag();
    }
  }
  simd::Lanes lanes() { return {re, im}; }
  simd::ConstLanes view() const { return {re, im}; }
  complex operator[](std::size_t k) const { return {re[k], im[k]}; }
};

void check_poles(std::span<const complex> s, const TimeScale& ts, std::size_t from, std::size_t to,
                 double c) {
  for (complex z : s) {
    for (std::size_t j = from + 1; j <= to; ++j) {
      if (is_pole_factor(z, c, ts.step(j))) {
        std::ostringstream msg;
        msg << "exponential factor for step " << j << " vanishes at s=" << z;
        throw Error(ErrorCode::PoleHit, msg.str());
      }
    }
  }
}

/// Multiplies every lane by one linear factor (1 + c g s).
void step_factor(double g, double c, bool divide, const SplitLanes& s, SplitLanes& e) {
  const double gs[1] = {g};
  simd::apply_linear_factors(gs, c, divide, s.view(), e.lanes());
}

/// sum_k w[k] * e[k], pairwise over the lanes.
complex weighted_lane_sum(const SplitLanes& w, const SplitLanes& e, SplitLanes& scratch) {
  simd::multiply(w.view(), e.view(), scratch.lanes());
  return {pairwise_sum<double>(scratch.re), pairwise_sum<double>(scratch.im)};
}

void check_index_has_neighbour(const TimeScale& ts, std::size_t at, Direction kind) {
  if (at >= ts.size()) throw Error(ErrorCode::IndexOutOfRange, "index outside window");
  if (kind == Direction::nabla && at == ts.last()) {
    throw Error(ErrorCode::IndexOutOfRange, "last instant has no successor for the nabla inverse");
  }
  if (kind == Direction::delta && at == 0) {
    throw Error(ErrorCode::IndexOutOfRange, "first instant has no predecessor for the delta inverse");
  }
}

std::vector<complex> inside_points(const TimeScale& ts, Direction kind, const PoleSides& sides) {
  std::vector<complex> inside = reciprocal_graininess(ts, kind);
  inside.insert(inside.end(), sides.enclosed.begin(), sides.enclosed.end());
  return inside;
}

SplitLanes node_weights(std::span<const complex> F_at_nodes, const Contour& contour,
                        Direction kind) {
  if (F_at_nodes.size() != contour.nodes) {
    throw Error(ErrorCode::ContourInvalid, "transform samples do not match the node count");
  }
  const double sign = kind == Direction::nabla ? -1.0 : 1.0;
  const std::vector<complex> w = contour.weights();
  SplitLanes out(contour.nodes);
  for (std::size_t k = 0; k < contour.nodes; ++k) {
    const complex v = sign * F_at_nodes[k] * w[k];
    out.re[k] = v.real();
    out.im[k] = v.imag();
  }
  return out;
}

}  // namespace

std::vector<complex> direct_transform(const Signal& f, std::span<const complex> s, Direction kind) {
  const TimeScale& ts = f.scale();
  SplitLanes acc(s.size());
  if (f.is_zero()) return std::vector<complex>(s.size(), 0.0);
  const IndexRange sup = *f.support();
  const std::size_t t0 = ts.t0_index();
  if (kind == Direction::nabla && sup.hi == ts.last()) {
    throw Error(ErrorCode::SupportTouchesBoundary,
                "support reaches the last instant, where mu is undefined");
  }
  if (kind == Direction::delta && sup.lo == 0) {
    throw Error(ErrorCode::SupportTouchesBoundary,
                "support reaches the first instant, where nu is undefined");
  }

  // nabla: e_delta(t_n, t0; -s), factors (1 - s g), multiplied going forward.
  // delta: e_nabla(t_n, t0; -s), factors (1 + s g), divided going forward.
  const double c = kind == Direction::nabla ? -1.0 : 1.0;
  const bool forward_divide = kind == Direction::delta;
  check_poles(s, ts, std::min(sup.lo, t0), std::max(sup.hi, t0), c);

  auto weighted = [&](std::size_t n) {
    const double w = kind == Direction::nabla ? ts.step(n + 1) : ts.step(n);
    return sup.contains(n) ? w * f[n] : complex{};
  };

  const SplitLanes sl(s);
  if (sup.contains(t0)) {
    const complex v = weighted(t0);
    for (std::size_t k = 0; k < s.size(); ++k) {
      acc.re[k] += v.real();
      acc.im[k] += v.imag();
    }
  }
  if (sup.hi > t0) {
    std::vector<double> g;
    std::vector<complex> v;
    for (std::size_t n = t0 + 1; n <= sup.hi; ++n) {
      g.push_back(ts.step(n));
      v.push_back(weighted(n));
    }
    simd::march_series(g, v, c, forward_divide, sl.view(), acc.lanes());
  }
  if (sup.lo < t0) {
    std::vector<double> g;
    std::vector<complex> v;
    for (std::size_t n = t0; n-- > sup.lo;) {
      g.push_back(ts.step(n + 1));
      v.push_back(weighted(n));
    }
    simd::march_series(g, v, c, !forward_divide, sl.view(), acc.lanes());
  }

  std::vector<complex> out(s.size());
  for (std::size_t k = 0; k < s.size(); ++k) out[k] = acc[k];
  return out;
}

complex direct_transform(const Signal& f, complex s, Direction kind) {
  const complex one[1] = {s};
  return direct_transform(f, one, kind).front();
}

Signal impulse(ScalePtr ts) {
  const std::size_t t0 = ts->t0_index();
  const double mu = ts->graininess(t0, Direction::delta);
  std::vector<complex> v(ts->size(), 0.0);
  v[t0] = 1.0 / mu;
  return Signal(std::move(ts), std::move(v), IndexRange{t0, t0});
}

Signal unit_step(ScalePtr ts, StepFlavor flavor) {
  const std::size_t t0 = ts->t0_index();
  std::vector<complex> v(ts->size(), 0.0);
  if (flavor == StepFlavor::causal) {
    for (std::size_t n = t0; n < v.size(); ++n) v[n] = 1.0;
    return Signal(std::move(ts), std::move(v), IndexRange{t0, v.size() - 1});
  }
  if (t0 == 0) return Signal::zero(std::move(ts));
  for (std::size_t n = 0; n < t0; ++n) v[n] = -1.0;
  return Signal(std::move(ts), std::move(v), IndexRange{0, t0 - 1});
}

namespace {

/// Accumulates E(p) = prod (1 - p g)^e over added steps together with the
/// sums S_j = sum (g / (1 - p g))^j. The i-th derivative of d/dp log E is
/// -e i! S_{i+1}; derivatives of E follow by the Leibniz recurrence.
class PoleKernel {
 public:
  PoleKernel(complex p, int order, int e) : p_(p), e_(e), S_(order + 1, 0.0) {}

  void add_step(double g) {
    const complex f = 1.0 - p_ * g;
    E_ = e_ < 0 ? E_ / f : E_ * f;
    const complex r = g / f;
    complex pw = 1.0;
    for (std::size_t j = 1; j < S_.size(); ++j) {
      pw *= r;
      S_[j] += pw;
    }
  }

  /// K_j = D_{j-1} / (j-1)!, j = 1..order.
  std::vector<complex> kernels() const {
    const std::size_t m = S_.size() - 1;
    std::vector<complex> ell(m, 0.0);
    double fact = 1.0;
    for (std::size_t i = 0; i < m; ++i) {
      if (i > 0) fact *= static_cast<double>(i);
      ell[i] = -static_cast<double>(e_) * fact * S_[i + 1];
    }
    std::vector<complex> d(m, 0.0);
    d[0] = E_;
    for (std::size_t i = 0; i + 1 < m; ++i) {
      complex acc = 0.0;
      double binom = 1.0;
      for (std::size_t r = 0; r <= i; ++r) {
        acc += binom * d[r] * ell[i - r];
        binom = binom * static_cast<double>(i - r) / static_cast<double>(r + 1);
      }
      d[i + 1] = acc;
    }
    double f = 1.0;
    for (std::size_t j = 1; j < m; ++j) {
      f *= static_cast<double>(j);
      d[j] /= f;
    }
    return d;
  }

 private:
  complex p_;
  int e_;
  complex E_ = 1.0;
  std::vector<complex> S_;
};

}  // namespace

Signal invert_rational(const RationalTransform& h, ScalePtr ts) {
  const std::vector<PartialFraction> terms = partial_fractions(h);
  for (const Pole& p : h.poles) {
    if (p.roc == Roc::untagged) {
      std::ostringstream msg;
      msg << "pole " << p.location << " has no region-of-convergence tag";
      throw Error(ErrorCode::UntaggedPole, msg.str());
    }
    for (std::size_t j = 1; j < ts->size(); ++j) {
      if (is_pole_factor(p.location, -1.0, ts->step(j))) {
        std::ostringstream msg;
        msg << "pole " << p.location << " equals the reciprocal of step " << j;
        throw Error(ErrorCode::PoleOnScale, msg.str());
      }
    }
  }

  const std::size_t t0 = ts->t0_index();
  const std::size_t last = ts->last();
  std::vector<complex> v(ts->size(), 0.0);
  for (const PartialFraction& pf : terms) {
    const int m = pf.pole.multiplicity;
    auto accumulate = [&](std::size_t n, const PoleKernel& k, double sign) {
      const std::vector<complex> kj = k.kernels();
      for (int j = 0; j < m; ++j) v[n] += sign * pf.coeffs[j] * kj[j];
    };
    if (pf.pole.roc == Roc::causal) {
      PoleKernel k(pf.pole.location, m, -1);
      for (std::size_t n = t0; n < last; ++n) {
        k.add_step(ts->step(n + 1));
        accumulate(n, k, 1.0);
      }
    } else {
      PoleKernel k(pf.pole.location, m, 1);
      for (std::size_t n = t0; n-- > 0;) {
        if (n + 1 < t0) k.add_step(ts->step(n + 2));
        accumulate(n, k, -1.0);
      }
    }
  }
  return Signal::from_values(std::move(ts), std::move(v));
}

PoleSides pole_sides(const RationalTransform& h) {
  PoleSides sides;
  for (const Pole& p : h.poles) {
    if (p.roc == Roc::untagged) {
      std::ostringstream msg;
      msg << "pole " << p.location << " has no region-of-convergence tag";
      throw Error(ErrorCode::UntaggedPole, msg.str());
    }
    (p.roc == Roc::anticausal ? sides.enclosed : sides.excluded).push_back(p.location);
  }
  return sides;
}

Contour default_contour(const TimeScale& ts, Direction kind, const PoleSides& sides,
                        std::size_t nodes) {
  const std::vector<complex> inside = inside_points(ts, kind, sides);
  std::vector<double> steps;
  for (std::size_t j = 1; j < ts.size(); ++j) steps.push_back(ts.step(j));
  return auto_contour(inside, sides.excluded, steps, kind, nodes);
}

std::vector<complex> contour_inverse_all(std::span<const complex> F_at_nodes, const TimeScale& ts,
                                         const Contour& contour, Direction kind,
                                         const PoleSides& sides) {
  validate(contour, inside_points(ts, kind, sides), sides.excluded);
  const SplitLanes w = node_weights(F_at_nodes, contour, kind);
  const std::vector<complex> pts = contour.points();
  const SplitLanes s(pts);
  SplitLanes scratch(contour.nodes);
  const std::size_t t0 = ts.t0_index();
  const std::size_t last = ts.last();
  std::vector<complex> out(ts.size(), 0.0);

  if (kind == Direction::nabla) {
    // E_n = e_nabla(t_{n+1}, t0; s); E = 1 at n = t0 - 1.
    SplitLanes e(contour.nodes, 1.0);
    for (std::size_t n = t0; n < last; ++n) {
      step_factor(ts.step(n + 1), -1.0, true, s, e);
      out[n] = weighted_lane_sum(w, e, scratch);
    }
    if (t0 >= 1) {
      SplitLanes b(contour.nodes, 1.0);
      out[t0 - 1] = weighted_lane_sum(w, b, scratch);
      for (std::size_t n = t0 - 1; n-- > 0;) {
        step_factor(ts.step(n + 2), -1.0, false, s, b);
        out[n] = weighted_lane_sum(w, b, scratch);
      }
    }
  } else {
    // E_n = e_delta(t_{n-1}, t0; s); E = 1 at n = t0 + 1.
    SplitLanes e(contour.nodes, 1.0);
    if (t0 + 1 <= last) {
      out[t0 + 1] = weighted_lane_sum(w, e, scratch);
      for (std::size_t n = t0 + 2; n <= last; ++n) {
        step_factor(ts.step(n - 1), 1.0, false, s, e);
        out[n] = weighted_lane_sum(w, e, scratch);
      }
    }
    SplitLanes b(contour.nodes, 1.0);
    for (std::size_t n = t0 + 1; n-- > 1;) {
      step_factor(ts.step(n), 1.0, true, s, b);
      out[n] = weighted_lane_sum(w, b, scratch);
    }
  }
  return out;
}

std::vector<complex> contour_inverse_all(const TransformFn& F, const TimeScale& ts,
                                         const Contour& contour, Direction kind,
                                         const PoleSides& sides) {
  validate(contour, inside_points(ts, kind, sides), sides.excluded);
  std::vector<complex> values;
  values.reserve(contour.nodes);
  for (complex z : contour.points()) values.push_back(F(z));
  return contour_inverse_all(values, ts, contour, kind, sides);
}

complex contour_inverse(const TransformFn& F, const TimeScale& ts, std::size_t at,
                        const Contour& contour, Direction kind, const PoleSides& sides) {
  check_index_has_neighbour(ts, at, kind);
  validate(contour, inside_points(ts, kind, sides), sides.excluded);
  const std::vector<complex> pts = contour.points();
  std::vector<complex> values;
  values.reserve(pts.size());
  for (complex z : pts) values.push_back(F(z));
  const SplitLanes w = node_weights(values, contour, kind);
  const SplitLanes s(pts);
  SplitLanes e(contour.nodes, 1.0);
  SplitLanes scratch(contour.nodes);
  const std::size_t t0 = ts.t0_index();

  std::vector<double> g;
  if (kind == Direction::nabla) {
    const std::size_t target = at + 1;
    const bool forward = target > t0;
    for (std::size_t j = std::min(target, t0) + 1; j <= std::max(target, t0); ++j) {
      g.push_back(ts.step(j));
    }
    simd::apply_linear_factors(g, -1.0, forward, s.view(), e.lanes());
  } else {
    const std::size_t target = at - 1;
    const bool forward = target > t0;
    for (std::size_t j = std::min(target, t0) + 1; j <= std::max(target, t0); ++j) {
      g.push_back(ts.step(j));
    }
    simd::apply_linear_factors(g, 1.0, !forward, s.view(), e.lanes());
  }
  return weighted_lane_sum(w, e, scratch);
}

}  // namespace chronoscale
