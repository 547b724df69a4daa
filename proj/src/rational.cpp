#include "chronoscale/rational.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "chronoscale/error.hpp"

namespace chronoscale {

namespace {

constexpr double kClusterTolerance = 1e-5;

int degree(const std::vector<complex>& c) noexcept {
  for (std::size_t k = c.size(); k > 0; --k) {
    if (c[k - 1] != 0.0) return static_cast<int>(k - 1);
  }
  return -1;
}

complex horner(const std::vector<complex>& c, complex s) {
  complex acc = 0.0;
  for (std::size_t k = c.size(); k > 0; --k) acc = acc * s + c[k - 1];
  return acc;
}

/// Coefficients of P(x + p), lowest degree first.
std::vector<complex> taylor_shift(std::vector<complex> c, complex p) {
  const int n = degree(c);
  if (n < 0) return {};
  c.resize(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i < n; ++i) {
    for (int j = n - 1; j >= i; --j) c[j] += p * c[j + 1];
  }
  return c;
}

}  // namespace

std::string_view roc_name(Roc roc) noexcept {
  switch (roc) {
    case Roc::causal: return "causal";
    case Roc::anticausal: return "anticausal";
    case Roc::untagged: return "untagged";
  }
  return "untagged";
}

complex RationalTransform::operator()(complex s) const { return horner(num, s) / horner(den, s); }

int RationalTransform::num_degree() const noexcept { return degree(num); }
int RationalTransform::den_degree() const noexcept { return degree(den); }

std::vector<complex> expand_poles(const std::vector<Pole>& poles) {
  std::vector<complex> c{1.0};
  for (const Pole& p : poles) {
    for (int r = 0; r < p.multiplicity; ++r) {
      std::vector<complex> next(c.size() + 1, 0.0);
      for (std::size_t k = 0; k < c.size(); ++k) {
        next[k + 1] += c[k];
        next[k] -= p.location * c[k];
      }
      c = std::move(next);
    }
  }
  return c;
}

RationalTransform RationalTransform::from_poles(std::vector<complex> num, std::vector<Pole> poles) {
  RationalTransform h;
  h.num = std::move(num);
  h.den = expand_poles(poles);
  h.poles = std::move(poles);
  return h;
}

double pole_mismatch(const RationalTransform& h) {
  const std::vector<complex> expanded = expand_poles(h.poles);
  const std::size_t n = std::max(expanded.size(), h.den.size());
  double worst = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const complex a = k < h.den.size() ? h.den[k] : 0.0;
    const complex e = k < expanded.size() ? expanded[k] : 0.0;
    worst = std::max(worst, std::abs(a - e) / std::max(1.0, std::abs(a)));
  }
  return worst;
}

std::vector<PartialFraction> partial_fractions(const RationalTransform& h) {
  if (!h.strictly_proper()) {
    throw Error(ErrorCode::ImproperRational,
                "numerator degree " + std::to_string(h.num_degree()) +
                    " must be below denominator degree " + std::to_string(h.den_degree()));
  }
  const complex lead = h.den[static_cast<std::size_t>(h.den_degree())];
  std::vector<PartialFraction> out;
  for (std::size_t i = 0; i < h.poles.size(); ++i) {
    const Pole& pole = h.poles[i];
    const auto m = static_cast<std::size_t>(pole.multiplicity);
    std::vector<complex> series = taylor_shift(h.num, pole.location);
    series.resize(m, 0.0);
    for (complex& a : series) a /= lead;
    for (std::size_t q = 0; q < h.poles.size(); ++q) {
      if (q == i) continue;
      const complex d = pole.location - h.poles[q].location;
      if (d == 0.0) throw Error(ErrorCode::DegenerateDenominator, "duplicate pole entries");
      for (int r = 0; r < h.poles[q].multiplicity; ++r) {
        // series / (d + x)
        complex prev = 0.0;
        for (std::size_t k = 0; k < m; ++k) {
          series[k] = (series[k] - prev) / d;
          prev = series[k];
        }
      }
    }
    PartialFraction pf{pole, std::vector<complex>(m)};
    for (std::size_t j = 1; j <= m; ++j) pf.coeffs[j - 1] = series[m - j];
    out.push_back(std::move(pf));
  }
  return out;
}

std::vector<complex> polynomial_roots(const std::vector<complex>& coeffs) {
  const int n = degree(coeffs);
  if (n < 1) return {};
  const complex lead = coeffs[static_cast<std::size_t>(n)];
  if (n == 1) return {-coeffs[0] / lead};
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
  for (int k = 1; k < n; ++k) companion(k, k - 1) = 1.0;
  for (int k = 0; k < n; ++k) companion(k, n - 1) = -coeffs[static_cast<std::size_t>(k)] / lead;
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  std::vector<complex> roots(solver.eigenvalues().begin(), solver.eigenvalues().end());
  std::sort(roots.begin(), roots.end(), [](complex a, complex b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return roots;
}

RationalTransform transfer_function(std::vector<complex> a, std::vector<complex> b) {
  const int n = degree(a);
  if (n < 1) {
    throw Error(ErrorCode::DegenerateDenominator,
                n < 0 ? "denominator coefficients are all zero" : "denominator has order zero");
  }
  a.resize(static_cast<std::size_t>(n) + 1);
  const complex lead = a.back();
  for (complex& c : a) c /= lead;
  for (complex& c : b) c /= lead;
  const int m = degree(b);
  b.resize(static_cast<std::size_t>(std::max(m, -1) + 1));

  struct Cluster {
    complex sum;
    int count;
    complex centre() const { return sum / static_cast<double>(count); }
  };
  std::vector<Cluster> clusters;
  for (complex r : polynomial_roots(a)) {
    bool merged = false;
    for (Cluster& c : clusters) {
      const complex z = c.centre();
      if (std::abs(r - z) <= kClusterTolerance * std::max({1.0, std::abs(r), std::abs(z)})) {
        c.sum += r;
        ++c.count;
        merged = true;
        break;
      }
    }
    if (!merged) clusters.push_back({r, 1});
  }

  RationalTransform h;
  h.num = std::move(b);
  h.den = std::move(a);
  for (const Cluster& c : clusters) h.poles.push_back({c.centre(), c.count, Roc::causal});
  return h;
}

}  // namespace chronoscale
