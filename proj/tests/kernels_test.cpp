#include "alphacalc/kernels/horner.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <random>
#include <vector>

namespace alphacalc::kernels {
namespace {

bool bit_equal(double a, double b) { return std::memcmp(&a, &b, sizeof(double)) == 0; }

TEST(HornerTest, ScalarMatchesDirectSum) {
  const std::vector<double> c{1.0, -2.0, 0.5, 3.0};
  const std::vector<double> x{0.0, 1.0, -1.5, 2.0};
  std::vector<double> out(x.size());
  horner_scalar(c, x, out);
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double expected = c[0] + c[1] * x[i] + c[2] * x[i] * x[i] + c[3] * x[i] * x[i] * x[i];
    EXPECT_NEAR(out[i], expected, 1e-12);
  }
}

TEST(HornerTest, EmptyAndConstantPolynomials) {
  const std::vector<double> x{0.1, 0.2, 0.3, 0.4, 0.5};
  std::vector<double> out(x.size(), 9.0);
  horner(std::span<const double>(), x, out);
  for (double v : out) EXPECT_EQ(v, 0.0);
  const std::vector<double> c{4.25};
  horner(c, x, out);
  for (double v : out) EXPECT_EQ(v, 4.25);
}

TEST(HornerTest, VariantsAreBitIdentical) {
  if (!avx2_available()) GTEST_SKIP() << "AVX2 not available on this CPU";
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> coeff(-10.0, 10.0);
  std::uniform_real_distribution<double> point(-2.0, 2.0);
  for (std::size_t degree : {0u, 1u, 2u, 7u, 31u, 64u}) {
    for (std::size_t count : {0u, 1u, 3u, 4u, 5u, 8u, 13u, 64u, 1001u}) {
      std::vector<double> c(degree + 1), x(count), a(count), b(count);
      for (auto& v : c) v = coeff(rng);
      for (auto& v : x) v = point(rng);
      horner(Isa::kScalar, c, x, a);
      horner(Isa::kAvx2, c, x, b);
      for (std::size_t i = 0; i < count; ++i) {
        ASSERT_TRUE(bit_equal(a[i], b[i])) << "degree " << degree << " count " << count << " i " << i;
      }
    }
  }
}

TEST(HornerTest, SpecialValuesPropagateIdentically) {
  if (!avx2_available()) GTEST_SKIP() << "AVX2 not available on this CPU";
  const std::vector<double> c{1.0, 1e308, -1e308};
  const std::vector<double> x{0.0, 1.0, 10.0, -10.0, std::nan(""), 1e-320, -0.0, INFINITY, 3.0};
  std::vector<double> a(x.size()), b(x.size());
  horner(Isa::kScalar, c, x, a);
  horner(Isa::kAvx2, c, x, b);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (std::isnan(a[i])) {
      EXPECT_TRUE(std::isnan(b[i]));
    } else {
      EXPECT_TRUE(bit_equal(a[i], b[i])) << i;
    }
  }
}

TEST(HornerTest, DispatchReportsAnIsa) {
  const Isa isa = active_isa();
  EXPECT_TRUE(isa == Isa::kScalar || avx2_available());
  EXPECT_FALSE(isa_name(isa).empty());
  std::vector<double> out(2);
  const std::vector<double> x(3);
  EXPECT_THROW(horner(std::span<const double>(), x, out), std::invalid_argument);
}

}  // namespace
}  // namespace alphacalc::kernels
