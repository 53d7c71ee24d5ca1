#include <cstdlib>
#include <cstring>
#include <stdexcept>

#include "alphacalc/kernels/horner.hpp"

namespace alphacalc::kernels {

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::kScalar: return "scalar";
    case Isa::kAvx2: return "avx2";
  }
  return "unknown";
}

bool avx2_available() {
#if defined(__x86_64__) || defined(__i386__)
  static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  return supported;
#else
  return false;
#endif
}

Isa active_isa() {
  static const Isa isa = [] {
    const char* forced = std::getenv("ALPHACALC_SIMD");
    if (forced != nullptr && std::strcmp(forced, "scalar") == 0) return Isa::kScalar;
    return avx2_available() ? Isa::kAvx2 : Isa::kScalar;
  }();
  return isa;
}

void horner(Isa isa, std::span<const double> coeffs, std::span<const double> x,
            std::span<double> out) {
  if (out.size() != x.size()) throw std::invalid_argument("horner: output size mismatch");
#if defined(__x86_64__) || defined(__i386__)
  if (isa == Isa::kAvx2 && avx2_available()) {
    horner_avx2(coeffs, x, out);
    return;
  }
#endif
  horner_scalar(coeffs, x, out);
}

void horner(std::span<const double> coeffs, std::span<const double> x, std::span<double> out) {
  horner(active_isa(), coeffs, x, out);
}

}  // namespace alphacalc::kernels
