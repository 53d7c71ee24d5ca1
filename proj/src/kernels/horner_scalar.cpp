#include <cmath>

#include "alphacalc/kernels/horner.hpp"

namespace alphacalc::kernels {

void horner_scalar(std::span<const double> coeffs, std::span<const double> x,
                   std::span<double> out) {
  const std::size_t count = x.size();
  if (coeffs.empty()) {
    for (std::size_t i = 0; i < count; ++i) out[i] = 0.0;
    return;
  }
  const std::size_t top = coeffs.size() - 1;
  for (std::size_t i = 0; i < count; ++i) {
    double acc = coeffs[top];
    for (std::size_t d = top; d-- > 0;) acc = std::fma(acc, x[i], coeffs[d]);
    out[i] = acc;
  }
}

}  // namespace alphacalc::kernels
