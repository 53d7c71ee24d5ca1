#pragma once

#include <span>
#include <string_view>

// Polynomial evaluation kernels used by numeric series evaluation.
//
// Every variant computes, for each point x[i],
//   out[i] = (((c[d] * x + c[d-1]) * x + ...) * x + c[0]
// with one fused multiply-add per step, so all variants are bit-identical.

namespace alphacalc::kernels {

enum class Isa { kScalar, kAvx2 };

std::string_view isa_name(Isa isa);

/// Best instruction set supported by the running CPU. Setting the
/// environment variable ALPHACALC_SIMD=scalar forces the scalar path.
Isa active_isa();

/// True when the AVX2 variant was compiled in and the CPU supports it.
bool avx2_available();

void horner_scalar(std::span<const double> coeffs, std::span<const double> x,
                   std::span<double> out);

#if defined(__x86_64__) || defined(__i386__)
void horner_avx2(std::span<const double> coeffs, std::span<const double> x,
                 std::span<double> out);
#endif

/// Runtime-dispatched entry point. `out.size()` must equal `x.size()`.
void horner(std::span<const double> coeffs, std::span<const double> x, std::span<double> out);

/// Same, with an explicit variant; falls back to scalar if `isa` is unavailable.
void horner(Isa isa, std::span<const double> coeffs, std::span<const double> x,
            std::span<double> out);

}  // namespace alphacalc::kernels
