#include <atomic>
#include <cstdlib>
#include <stdexcept>

#include "chronoscale/simd/kernels.hpp"

namespace chronoscale::simd {

#ifndef CHRONOSCALE_HAVE_AVX2
// Non-x86 builds: the AVX2 names resolve to the reference loops.
namespace avx2 {
void apply_linear_factors(std::span<const double> g, double c, bool divide, ConstLanes s, Lanes p) {
  scalar::apply_linear_factors(g, c, divide, s, p);
}
void march_series(std::span<const double> g, std::span<const std::complex<double>> v, double c,
                  bool divide, ConstLanes s, Lanes acc) {
  scalar::march_series(g, v, c, divide, s, acc);
}
void multiply(ConstLanes a, ConstLanes b, Lanes out) { scalar::multiply(a, b, out); }
}  // namespace avx2
#endif

namespace {

bool cpu_has_avx2() noexcept {
#if defined(CHRONOSCALE_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Isa detect() noexcept {
  if (const char* env = std::getenv("CHRONOSCALE_FORCE_SCALAR"); env && *env && *env != '0') {
    return Isa::scalar;
  }
  return cpu_has_avx2() ? Isa::avx2 : Isa::scalar;
}

std::atomic<int> g_override{-1};

}  // namespace

std::string_view isa_name(Isa isa) noexcept {
  return isa == Isa::avx2 ? "avx2" : "scalar";
}

bool isa_available(Isa isa) noexcept {
  return isa == Isa::scalar || cpu_has_avx2();
}

Isa active_isa() noexcept {
  static const Isa detected = detect();
  const int o = g_override.load(std::memory_order_relaxed);
  return o < 0 ? detected : static_cast<Isa>(o);
}

void force_isa(Isa isa) {
  if (!isa_available(isa)) throw std::invalid_argument("ISA not available on this CPU");
  g_override.store(static_cast<int>(isa), std::memory_order_relaxed);
}

void reset_isa() noexcept { g_override.store(-1, std::memory_order_relaxed); }

void apply_linear_factors(std::span<const double> g, double c, bool divide, ConstLanes s, Lanes p) {
  if (active_isa() == Isa::avx2) return avx2::apply_linear_factors(g, c, divide, s, p);
  scalar::apply_linear_factors(g, c, divide, s, p);
}

void march_series(std::span<const double> g, std::span<const std::complex<double>> v, double c,
                  bool divide, ConstLanes s, Lanes acc) {
  if (active_isa() == Isa::avx2) return avx2::march_series(g, v, c, divide, s, acc);
  scalar::march_series(g, v, c, divide, s, acc);
}

void multiply(ConstLanes a, ConstLanes b, Lanes out) {
  if (active_isa() == Isa::avx2) return avx2::multiply(a, b, out);
  scalar::multiply(a, b, out);
}

}  // namespace chronoscale::simd
