#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

#include "alphacalc/kernels/horner.hpp"

namespace alphacalc::kernels {

__attribute__((target("avx2,fma"))) void horner_avx2(std::span<const double> coeffs,
                                                      std::span<const double> x,
                                                      std::span<double> out) {
  const std::size_t count = x.size();
  if (coeffs.empty()) {
    for (std::size_t i = 0; i < count; ++i) out[i] = 0.0;
    return;
  }
  const std::size_t top = coeffs.size() - 1;
  std::size_t i = 0;
  // Two independent accumulators per iteration hide the FMA latency.
  for (; i + 8 <= count; i += 8) {
    const __m256d x0 = _mm256_loadu_pd(x.data() + i);
    const __m256d x1 = _mm256_loadu_pd(x.data() + i + 4);
    __m256d acc0 = _mm256_set1_pd(coeffs[top]);
    __m256d acc1 = acc0;
    for (std::size_t d = top; d-- > 0;) {
      const __m256d c = _mm256_set1_pd(coeffs[d]);
      acc0 = _mm256_fmadd_pd(acc0, x0, c);
      acc1 = _mm256_fmadd_pd(acc1, x1, c);
    }
    _mm256_storeu_pd(out.data() + i, acc0);
    _mm256_storeu_pd(out.data() + i + 4, acc1);
  }
  for (; i + 4 <= count; i += 4) {
    const __m256d xv = _mm256_loadu_pd(x.data() + i);
    __m256d acc = _mm256_set1_pd(coeffs[top]);
    for (std::size_t d = top; d-- > 0;) acc = _mm256_fmadd_pd(acc, xv, _mm256_set1_pd(coeffs[d]));
    _mm256_storeu_pd(out.data() + i, acc);
  }
  if (i < count) horner_scalar(coeffs, x.subspan(i), out.subspan(i));
}

}  // namespace alphacalc::kernels

#endif
