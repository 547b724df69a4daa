#pragma once

#include <string_view>
#include <vector>

#include "chronoscale/timescale.hpp"

namespace chronoscale {

enum class Roc { causal, anticausal, untagged };

std::string_view roc_name(Roc roc) noexcept;

struct Pole {
  complex location;
  int multiplicity = 1;
  Roc roc = Roc::causal;
};

/// H(s) = sum b_k s^k / sum a_k s^k with a_N = 1 and the factored
/// denominator carried alongside as tagged poles.
struct RationalTransform {
  std::vector<complex> num;  // b_0..b_M
  std::vector<complex> den;  // a_0..a_N
  std::vector<Pole> poles;

  complex operator()(complex s) const;

  /// Degrees after trimming trailing zero coefficients; -1 for the zero
  /// polynomial.
  int num_degree() const noexcept;
  int den_degree() const noexcept;
  bool strictly_proper() const noexcept { return num_degree() < den_degree(); }

  /// Monic denominator prod (s - p)^m built from `poles`.
  static RationalTransform from_poles(std::vector<complex> num, std::vector<Pole> poles);
};

/// Coefficients of prod (s - p)^m, lowest degree first.
std::vector<complex> expand_poles(const std::vector<Pole>& poles);

/// Max |a_k - expanded_k| / max(1, |a_k|); used to check that tagged poles
/// reproduce the denominator.
double pole_mismatch(const RationalTransform& h);

/// Terms coeffs[j-1] / (s - p)^j, j = 1..multiplicity.
struct PartialFraction {
  Pole pole;
  std::vector<complex> coeffs;
};

/// Throws ImproperRational unless strictly proper.
std::vector<PartialFraction> partial_fractions(const RationalTransform& h);

/// Transfer function of sum a_k y^(nabla^k) = sum b_k x^(nabla^k).
/// Normalises to a_N = 1, finds the roots of the denominator, merges roots
/// closer than 1e-5 relative into one pole of higher multiplicity, and tags
/// every pole causal. Throws DegenerateDenominator when N < 1.
RationalTransform transfer_function(std::vector<complex> a, std::vector<complex> b);

/// Roots of a polynomial given lowest degree first, leading coefficient
/// nonzero.
std::vector<complex> polynomial_roots(const std::vector<complex>& coeffs);

}  // namespace chronoscale
