#pragma once

// Batched complex inner loops over independent lanes (contour nodes or
// s-grid samples). Lanes are stored split into real and imaginary arrays.
//
// Every variant performs the same IEEE operations in the same order, so the
// scalar reference and the vector paths agree bit for bit.

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>

namespace chronoscale::simd {

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa) noexcept;
bool isa_available(Isa isa) noexcept;

/// Best available ISA, unless overridden by force_isa() or the
/// CHRONOSCALE_FORCE_SCALAR environment variable.
Isa active_isa() noexcept;
void force_isa(Isa isa);
void reset_isa() noexcept;

struct ConstLanes {
  std::span<const double> re;
  std::span<const double> im;
  std::size_t size() const noexcept { return re.size(); }
};

struct Lanes {
  std::span<double> re;
  std::span<double> im;
  std::size_t size() const noexcept { return re.size(); }
  operator ConstLanes() const noexcept { return {re, im}; }
};

/// p[l] *= prod_k (1 + c*g[k]*s[l])   (divide == false)
/// p[l] /= prod_k (1 + c*g[k]*s[l])   (divide == true, one division per factor)
void apply_linear_factors(std::span<const double> g, double c, bool divide, ConstLanes s, Lanes p);

/// e = 1; for j: e = e (*|/) (1 + c*g[j]*s[l]); acc[l] += v[j] * e
/// Marching series of a weighted exponential sum.
void march_series(std::span<const double> g, std::span<const std::complex<double>> v, double c,
                  bool divide, ConstLanes s, Lanes acc);

/// out[l] = a[l] * b[l]
void multiply(ConstLanes a, ConstLanes b, Lanes out);

// Explicit variants, exposed for equivalence tests.
namespace scalar {
void apply_linear_factors(std::span<const double> g, double c, bool divide, ConstLanes s, Lanes p);
void march_series(std::span<const double> g, std::span<const std::complex<double>> v, double c,
                  bool divide, ConstLanes s, Lanes acc);
void multiply(ConstLanes a, ConstLanes b, Lanes out);
}  // namespace scalar

namespace avx2 {
void apply_linear_factors(std::span<const double> g, double c, bool divide, ConstLanes s, Lanes p);
void march_series(std::span<const double> g, std::span<const std::complex<double>> v, double c,
                  bool divide, ConstLanes s, Lanes acc);
void multiply(ConstLanes a, ConstLanes b, Lanes out);
}  // namespace avx2

}  // namespace chronoscale::simd
