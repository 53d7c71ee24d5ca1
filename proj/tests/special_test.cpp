#include "alphacalc/special.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "alphacalc/errors.hpp"
#include "test_support.hpp"

namespace alphacalc {
namespace {

const AlphaBasis kHalf(1, 2);

// E_alpha(e^(i alpha pi/2)-rotated argument): C + iS = exp(e^(i alpha pi/2) z^alpha / alpha).
std::complex<double> rotated_exponential(const AlphaBasis& a, double z) {
  const double alpha = a.to_double();
  const double u = std::pow(z, alpha) / alpha;
  return std::exp(std::polar(u, alpha * std::numbers::pi / 2.0));
}

TEST(EAlphaTest, SeriesCoefficients) {
  const auto e1 = e_alpha_series(AlphaBasis(1, 1), 10);
  for (long k = 0; k < 10; ++k) EXPECT_EQ(e1.coeff(Rat(k)), Rat(1) / factorial(k));
  const auto e = e_alpha_series(kHalf, 8);
  EXPECT_EQ(e, make_series({{Rat(0), Rat(1)},
                            {Rat(1, 2), Rat(2)},
                            {Rat(1), Rat(2)},
                            {Rat(3, 2), Rat(4, 3)},
                            {Rat(2), Rat(2, 3)},
                            {Rat(5, 2), Rat(4, 15)},
                            {Rat(3), Rat(4, 45)},
                            {Rat(7, 2), Rat(8, 315)}},
                           Rat(4)));
  for (const AlphaBasis& a : {AlphaBasis(1, 3), AlphaBasis(2, 3), AlphaBasis(3, 5)}) {
    EXPECT_EQ(e_alpha_series(a, 30).coeff(Rat(0)), Rat(1));
  }
  EXPECT_THROW(e_alpha_series(kHalf, 0), InputError);
}

TEST(EAlphaTest, DefiningEquationHoldsExactly) {
  for (const AlphaBasis& a : {AlphaBasis(1, 1), AlphaBasis(1, 2), AlphaBasis(1, 3), AlphaBasis(2, 3), AlphaBasis(3, 5)}) {
    const long K = 40 * a.m();
    const auto e = e_alpha_series(a, K);
    const auto d = alpha_deriv(e, a);
    EXPECT_EQ(d.truncation_order(), Rat(K - a.m(), a.n()));
    EXPECT_EQ(d, truncated(e, Rat(K - a.m(), a.n())));
  }
}

TEST(EAlphaTest, ClosedForm) {
  EXPECT_NEAR(e_alpha_eval(kHalf, EvalPoint(1.0)), 7.38905609893065, 1e-12);
  EXPECT_NEAR(e_alpha_eval(AlphaBasis(1, 1), EvalPoint(1.0)), std::numbers::e, 1e-15);
  EXPECT_NEAR(e_alpha_eval(kHalf, EvalPoint(4.0)), 54.598150033144236, 1e-10);
  EXPECT_THROW(e_alpha_eval(kHalf, EvalPoint(0.0)), PreconditionError);
}

TEST(EAlphaTest, SeriesMatchesClosedForm) {
  for (const AlphaBasis& a : {AlphaBasis(1, 2), AlphaBasis(1, 3), AlphaBasis(2, 3)}) {
    const auto e = e_alpha_series(a, 40 * a.m());
    for (double z : {0.1, 0.5, 1.0}) EXPECT_NEAR(eval(e, EvalPoint(z)), e_alpha_eval(a, EvalPoint(z)), 1e-8);
  }
}

TEST(EAlphaTest, ScaledResidualVanishes) {
  EXPECT_TRUE(scaled_e_alpha_residual(kHalf, Rat(1), 30).is_zero());
  EXPECT_TRUE(scaled_e_alpha_residual(kHalf, Rat(4), 30).is_zero());
  EXPECT_TRUE(scaled_e_alpha_residual(AlphaBasis(2, 3), Rat(27, 8), 30).is_zero());
  EXPECT_TRUE(scaled_e_alpha_residual(AlphaBasis(1, 1), Rat(7, 3), 30).is_zero());
  EXPECT_THROW(scaled_e_alpha_residual(kHalf, Rat(-1), 30), PreconditionError);
}

TEST(EAlphaTest, ScaledResidualWithIrrationalRootIsRoundingSized) {
  const auto r = scaled_e_alpha_residual(kHalf, Rat(2), 30);
  for (const auto& [k, c] : r.terms()) EXPECT_LT(std::abs(c.to_double()), 1e-14) << k;
}

TEST(TrigAlphaTest, AlphaOneIsCosineAndSine) {
  const auto c = trig_alpha_series(TrigKind::kCos, AlphaBasis(1, 1), 12);
  const auto s = trig_alpha_series(TrigKind::kSin, AlphaBasis(1, 1), 12);
  for (long k = 0; k < 12; ++k) {
    const double mag = 1.0 / std::tgamma(static_cast<double>(k) + 1.0);
    const double cos_coeff = k % 2 ? 0.0 : ((k / 2) % 2 ? -mag : mag);
    const double sin_coeff = k % 2 ? (((k - 1) / 2) % 2 ? -mag : mag) : 0.0;
    EXPECT_DOUBLE_EQ(c.coeff(Rat(k)), cos_coeff) << k;
    EXPECT_DOUBLE_EQ(s.coeff(Rat(k)), sin_coeff) << k;
  }
  // multiples of pi/2 are exact, so the zeros are stored as absent terms
  EXPECT_EQ(c.terms().count(1), 0u);
  EXPECT_EQ(s.terms().count(0), 0u);
}

TEST(TrigAlphaTest, ConstantTerms) {
  for (const AlphaBasis& a : {AlphaBasis(1, 2), AlphaBasis(1, 3), AlphaBasis(3, 5)}) {
    EXPECT_EQ(trig_alpha_series(TrigKind::kCos, a, 20).coeff(Rat(0)), 1.0);
    EXPECT_EQ(trig_alpha_series(TrigKind::kSin, a, 20).coeff(Rat(0)), 0.0);
  }
}

TEST(TrigAlphaTest, ClosedFormValues) {
  EXPECT_NEAR(trig_alpha_eval(TrigKind::kCos, AlphaBasis(1, 1), EvalPoint(std::numbers::pi)), -1.0, 1e-15);
  const double r2 = std::numbers::sqrt2;
  EXPECT_NEAR(trig_alpha_eval(TrigKind::kCos, kHalf, EvalPoint(1.0)), std::exp(r2) * std::cos(r2), 1e-13);
  EXPECT_NEAR(trig_alpha_eval(TrigKind::kSin, kHalf, EvalPoint(1.0)), std::exp(r2) * std::sin(r2), 1e-13);
  EXPECT_NEAR(trig_alpha_eval(TrigKind::kSin, kHalf, EvalPoint(1.0)), 4.062929, 1e-6);
  EXPECT_NEAR(trig_alpha_eval(TrigKind::kCos, kHalf, EvalPoint(1.0)), 0.641435, 1e-6);
}

TEST(TrigAlphaTest, ComplexExponentialOracle) {
  for (const AlphaBasis& a : {AlphaBasis(1, 2), AlphaBasis(1, 3), AlphaBasis(2, 3), AlphaBasis(3, 5)}) {
    for (double z : {0.05, 0.3, 1.0, 2.5}) {
      const auto w = rotated_exponential(a, z);
      const double c = trig_alpha_eval(TrigKind::kCos, a, EvalPoint(z));
      const double s = trig_alpha_eval(TrigKind::kSin, a, EvalPoint(z));
      EXPECT_NEAR(c, w.real(), 1e-12 * std::abs(w));
      EXPECT_NEAR(s, w.imag(), 1e-12 * std::abs(w));
      // Euler identity: C^2 + S^2 = |E|^2
      const double u = std::pow(z, a.to_double()) / a.to_double();
      EXPECT_NEAR(c * c + s * s, std::exp(2.0 * u * std::cos(a.to_double() * std::numbers::pi / 2.0)),
                  1e-10 * std::norm(w));
    }
  }
}

TEST(TrigAlphaTest, SeriesMatchesClosedForm) {
  for (const AlphaBasis& a : {AlphaBasis(1, 2), AlphaBasis(1, 3), AlphaBasis(2, 3)}) {
    const auto c = trig_alpha_series(TrigKind::kCos, a, 40 * a.m());
    const auto s = trig_alpha_series(TrigKind::kSin, a, 40 * a.m());
    for (double z : {0.1, 0.5, 1.0}) {
      EXPECT_NEAR(eval(c, EvalPoint(z)), trig_alpha_eval(TrigKind::kCos, a, EvalPoint(z)), 1e-8);
      EXPECT_NEAR(eval(s, EvalPoint(z)), trig_alpha_eval(TrigKind::kSin, a, EvalPoint(z)), 1e-8);
    }
  }
}

TEST(TrigAlphaTest, DerivativeRotatesThePhase) {
  for (const AlphaBasis& a : {AlphaBasis(1, 1), AlphaBasis(1, 2), AlphaBasis(1, 3), AlphaBasis(2, 3)}) {
    const long K = 30 * a.m();
    for (TrigKind kind : {TrigKind::kCos, TrigKind::kSin}) {
      const auto d = alpha_deriv(trig_alpha_series(kind, a, K), a);
      const auto shifted = trig_alpha_series(kind, a, K - a.m(), 1);
      EXPECT_EQ(d.truncation_order(), shifted.truncation_order());
      for (long k = 0; k < K; ++k) {
        const Rat e(k, a.n());
        EXPECT_NEAR(d.coeff(e), shifted.coeff(e), 1e-12 * std::max(1.0, std::abs(shifted.coeff(e))));
      }
    }
  }
}

TEST(SemigroupTest, Defect) {
  EXPECT_NEAR(semigroup_defect(kHalf, EvalPoint(1.0), EvalPoint(1.0)), std::exp(2.0 * std::numbers::sqrt2) - std::exp(4.0),
              1e-9);
  EXPECT_NEAR(semigroup_defect(kHalf, EvalPoint(1.0), EvalPoint(1.0)), -37.6794, 1e-4);
  EXPECT_NEAR(semigroup_defect(AlphaBasis(1, 1), EvalPoint(0.3), EvalPoint(1.7)), 0.0, 1e-12);
  EXPECT_NEAR(semigroup_defect(kHalf, EvalPoint(1.0), EvalPoint(1e-16)), 0.0, 1e-6);
}

}  // namespace
}  // namespace alphacalc
