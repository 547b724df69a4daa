#include "chronoscale/calculus.hpp"

#include <algorithm>
#include <string>

#include "chronoscale/error.hpp"

namespace chronoscale {

namespace {

// One nabla/delta difference over the valid index range [lo, hi] of `in`.
// Entries outside the returned range are zero.
IndexRange difference_once(const TimeScale& ts, const std::vector<complex>& in, IndexRange valid,
                           Direction dir, std::vector<complex>& out) {
  std::fill(out.begin(), out.end(), complex{});
  if (dir == Direction::nabla) {
    const IndexRange next{valid.lo + 1, valid.hi};
    for (std::size_t n = next.lo; n <= next.hi; ++n) {
      out[n] = (in[n] - in[n - 1]) / ts.step(n);
    }
    return next;
  }
  const IndexRange next{valid.lo, valid.hi - 1};
  for (std::size_t n = next.lo; n <= next.hi; ++n) {
    out[n] = (in[n + 1] - in[n]) / ts.step(n + 1);
  }
  return next;
}

}  // namespace

Signal derivative(const Signal& f, Direction dir, int order) {
  if (order < 1) {
    throw Error(ErrorCode::OrderZeroOrNegative, "derivative order " + std::to_string(order));
  }
  const TimeScale& ts = f.scale();
  const auto n_order = static_cast<std::size_t>(order);
  if (n_order >= ts.size()) {
    throw Error(ErrorCode::WindowTooSmall, "order " + std::to_string(order) +
                                               " needs more than " + std::to_string(ts.size()) +
                                               " instants");
  }
  if (f.is_zero()) return Signal::zero(f.scale_ptr());

  std::vector<complex> cur = f.values();
  std::vector<complex> next(cur.size());
  IndexRange valid{0, ts.last()};
  for (int k = 0; k < order; ++k) {
    valid = difference_once(ts, cur, valid, dir, next);
    std::swap(cur, next);
  }

  // The difference of a finite-support signal vanishes away from the support
  // widened by `order` on the side the stencil looks at.
  const IndexRange s = *f.support();
  IndexRange reach = dir == Direction::nabla
                         ? IndexRange{s.lo, std::min(ts.last(), s.hi + n_order)}
                         : IndexRange{s.lo >= n_order ? s.lo - n_order : 0, s.hi};
  const std::size_t lo = std::max(valid.lo, reach.lo);
  const std::size_t hi = std::min(valid.hi, reach.hi);
  if (lo > hi) return Signal::zero(f.scale_ptr());
  for (std::size_t n = 0; n < cur.size(); ++n) {
    if (n < lo || n > hi) cur[n] = complex{};
  }
  return Signal(f.scale_ptr(), std::move(cur), IndexRange{lo, hi});
}

Signal antiderivative(const Signal& f, Direction dir) {
  const TimeScale& ts = f.scale();
  if (f.is_zero()) return Signal::zero(f.scale_ptr());
  const IndexRange s = *f.support();
  std::vector<complex> out(ts.size());

  if (dir == Direction::nabla) {
    if (s.lo == 0) {
      throw Error(ErrorCode::SupportTouchesBoundary,
                  "nabla anti-derivative needs a zero sample left of the support");
    }
    complex acc{};
    for (std::size_t n = s.lo; n <= ts.last(); ++n) {
      acc += ts.step(n) * f[n];
      out[n] = acc;
    }
    return Signal(f.scale_ptr(), std::move(out), IndexRange{s.lo, ts.last()});
  }

  if (s.hi == ts.last()) {
    throw Error(ErrorCode::SupportTouchesBoundary,
                "delta anti-derivative needs a zero sample right of the support");
  }
  complex acc{};
  for (std::size_t n = s.hi + 1; n-- > 0;) {
    acc -= ts.step(n + 1) * f[n];
    out[n] = acc;
  }
  return Signal(f.scale_ptr(), std::move(out), IndexRange{0, s.hi});
}

complex definite_integral(const Signal& f, std::size_t a, std::size_t b, Direction dir) {
  const TimeScale& ts = f.scale();
  if (a > b) {
    throw Error(ErrorCode::ReversedInterval,
                "a=" + std::to_string(a) + " exceeds b=" + std::to_string(b));
  }
  if (b > ts.last()) throw Error(ErrorCode::IndexOutOfRange, "b=" + std::to_string(b));
  complex acc{};
  if (dir == Direction::nabla) {
    for (std::size_t n = a + 1; n <= b; ++n) acc += ts.step(n) * f[n];
  } else {
    for (std::size_t n = a; n < b; ++n) acc += ts.step(n + 1) * f[n];
  }
  return acc;
}

}  // namespace chronoscale
