#include "alphacalc/calculus.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "alphacalc/errors.hpp"
#include "test_support.hpp"

namespace alphacalc {
namespace {

using testing::random_series;
using testing::Rng;

const std::vector<AlphaBasis> kAlphas{AlphaBasis(1, 1), AlphaBasis(1, 2), AlphaBasis(1, 3), AlphaBasis(2, 3),
                                      AlphaBasis(3, 5)};

TEST(AlphaBasisTest, Validation) {
  EXPECT_EQ(AlphaBasis::parse("1/2"), AlphaBasis(1, 2));
  EXPECT_EQ(AlphaBasis::parse("1"), AlphaBasis(1, 1));
  EXPECT_THROW(AlphaBasis(0, 2), InputError);
  EXPECT_THROW(AlphaBasis(3, 2), InputError);
  EXPECT_THROW(AlphaBasis(2, 4), InputError);
  EXPECT_THROW(AlphaBasis::parse("-1/2"), InputError);
  EXPECT_THROW(AlphaBasis::parse("x"), InputError);
}

TEST(AlphaDerivTest, Monomials) {
  const AlphaBasis half(1, 2);
  // z^(3/2) -> (3/2) z
  EXPECT_EQ(alpha_deriv(make_series({{Rat(3, 2), Rat(1)}}, Rat(10)), half),
            make_series({{Rat(1), Rat(3, 2)}}, Rat(19, 2)));
  // the constant term vanishes
  EXPECT_TRUE(alpha_deriv(make_series({{Rat(0), Rat(5)}}, Rat(10)), half).is_zero());
  // z -> z^(1/2)
  EXPECT_EQ(alpha_deriv(make_series({{Rat(1), Rat(1)}}, Rat(10)), half),
            make_series({{Rat(1, 2), Rat(1)}}, Rat(19, 2)));
  // z^(-1/2) -> -1/2 z^(-1)
  EXPECT_EQ(alpha_deriv(make_series({{Rat(-1, 2), Rat(1)}}, Rat(2)), half),
            make_series({{Rat(-1), Rat(-1, 2)}}, Rat(3, 2)));
}

TEST(AlphaDerivTest, AlphaOneIsTheOrdinaryDerivative) {
  const auto f = make_series({{Rat(0), Rat(1)}, {Rat(1), Rat(2)}, {Rat(2), Rat(3)}, {Rat(5), Rat(-1)}}, Rat(8));
  const auto expected = make_series({{Rat(0), Rat(2)}, {Rat(1), Rat(6)}, {Rat(4), Rat(-5)}}, Rat(7));
  EXPECT_EQ(alpha_deriv(f, AlphaBasis(1, 1)), expected);
}

TEST(AlphaDerivTest, IteratedCoefficientIsFallingProduct) {
  const AlphaBasis half(1, 2);
  const auto z = make_series({{Rat(1), Rat(1)}}, Rat(10));
  EXPECT_EQ(alpha_deriv_iter(z, half, 2), make_series({{Rat(0), Rat(1, 2)}}, Rat(9)));
  EXPECT_EQ(alpha_deriv_iter(z, half, 0), z);
  const AlphaBasis a(2, 3);
  const Rat beta(7, 4);
  const auto mono = make_series({{beta, Rat(1)}}, Rat(20));
  Rat c(1);
  for (long i = 0; i < 3; ++i) c *= beta - Rat(i) * a.value();
  EXPECT_EQ(alpha_deriv_iter(mono, a, 3), make_series({{beta - Rat(3) * a.value(), c}}, Rat(20) - Rat(2)));
  EXPECT_THROW(alpha_deriv_iter(mono, a, -1), InputError);
}

TEST(AlphaDerivTest, LeibnizRuleHoldsExactly) {
  Rng rng(2024);
  for (const auto& alpha : kAlphas) {
    for (int trial = 0; trial < 100; ++trial) {
      const auto f = random_series(rng, 8, Rat(-3), Rat(5), 6, Rat(6));
      const auto g = random_series(rng, 8, Rat(-3), Rat(5), 6, Rat(6));
      const auto lhs = alpha_deriv(f * g, alpha);
      const auto rhs = g * alpha_deriv(f, alpha) + f * alpha_deriv(g, alpha);
      EXPECT_TRUE(agree_through_common_order(lhs, rhs)) << "alpha " << alpha.str() << " trial " << trial;
    }
  }
}

TEST(AlphaDerivTest, Linearity) {
  Rng rng(5);
  const AlphaBasis a(1, 3);
  for (int trial = 0; trial < 50; ++trial) {
    const auto f = random_series(rng, 8, Rat(-3), Rat(5), 6, Rat(6));
    const auto g = random_series(rng, 8, Rat(-3), Rat(5), 6, Rat(6));
    const Rat p = testing::random_coeff(rng), q = testing::random_coeff(rng);
    EXPECT_EQ(alpha_deriv(scale(f, p) + scale(g, q), a),
              scale(alpha_deriv(f, a), p) + scale(alpha_deriv(g, a), q));
  }
}

TEST(AlphaDerivTest, CauchyEquationConsequence) {
  Rng rng(11);
  const AlphaBasis a(3, 5);
  for (int trial = 0; trial < 50; ++trial) {
    const Rat beta(testing::uniform(rng, -12, 20), testing::uniform(rng, 1, 6));
    const Rat eps(testing::uniform(rng, -12, 20), testing::uniform(rng, 1, 6));
    const auto lhs = make_series({{beta - eps, Rat(1)}}, beta - eps + Rat(10)) *
                     make_series({{eps, Rat(1)}}, eps + Rat(10));
    const auto rhs = make_series({{beta, Rat(1)}}, beta + Rat(10));
    EXPECT_EQ(alpha_deriv(lhs, a), alpha_deriv(rhs, a));
  }
}

TEST(AlphaDerivTest, SemigroupOfIterates) {
  Rng rng(77);
  const AlphaBasis a(2, 3);
  for (int trial = 0; trial < 30; ++trial) {
    const auto f = random_series(rng, 8, Rat(-3), Rat(5), 6, Rat(8));
    for (long l = 0; l <= 3; ++l) {
      for (long m = 0; l + m <= 6; ++m) {
        const auto lm = alpha_deriv_iter(alpha_deriv_iter(f, a, m), a, l);
        EXPECT_EQ(lm, alpha_deriv_iter(f, a, l + m));
        EXPECT_EQ(lm, alpha_deriv_iter(alpha_deriv_iter(f, a, l), a, m));
      }
    }
  }
}

TEST(AlphaIntegralTest, MonomialsAndPrecondition) {
  const AlphaBasis half(1, 2);
  EXPECT_EQ(alpha_integral(make_series({{Rat(0), Rat(1)}}, Rat(10)), half),
            make_series({{Rat(1, 2), Rat(2)}}, Rat(21, 2)));
  EXPECT_THROW(alpha_integral(make_series({{Rat(-1, 2), Rat(1)}}, Rat(10)), half), PreconditionError);
  try {
    alpha_integral(make_series({{Rat(-1, 2), Rat(1)}}, Rat(10)), half);
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("beta + alpha != 0"), std::string::npos);
  }
}

TEST(AlphaIntegralTest, FundamentalTheorem) {
  Rng rng(31);
  for (const auto& alpha : kAlphas) {
    int checked = 0;
    while (checked < 40) {
      const auto f = random_series(rng, 8, Rat(-3), Rat(5), 6, Rat(6));
      if (!f.coeff(-alpha.value()).is_zero()) continue;
      ++checked;
      EXPECT_EQ(alpha_deriv(alpha_integral(f, alpha), alpha), f);
      const auto constant_free = f - make_series({{Rat(0), f.coeff(Rat(0))}}, f.truncation_order());
      EXPECT_EQ(alpha_integral(alpha_deriv(constant_free, alpha), alpha), constant_free);
    }
  }
}

TEST(ChainRuleTest, SquareOfSquareRoot) {
  const AlphaBasis half(1, 2);
  const Polynomial square(1, {{{2}, Rat(1)}});
  const std::vector<PuiseuxSeries> g{make_series({{Rat(1, 2), Rat(1)}}, Rat(10))};
  const auto d = chain_rule_deriv(square, g, half);
  EXPECT_TRUE(agree_through_common_order(d, make_series({{Rat(1, 2), Rat(1)}}, Rat(10))));
  EXPECT_TRUE(agree_through_common_order(d, alpha_deriv(square.eval_times(g, make_series({{Rat(0), Rat(1)}}, Rat(20))), half)));
}

TEST(ChainRuleTest, AgreesWithDirectDerivativeOfComposition) {
  Rng rng(8);
  const AlphaBasis a(1, 3);
  const Polynomial F(2, {{{2, 1}, Rat(3)}, {{0, 3}, Rat(-1, 2)}, {{1, 0}, Rat(5)}, {{0, 0}, Rat(7)}});
  const auto one = make_series({{Rat(0), Rat(1)}}, Rat(50));
  for (int trial = 0; trial < 30; ++trial) {
    const std::vector<PuiseuxSeries> g{random_series(rng, 5, Rat(0), Rat(3), 3, Rat(6)),
                                       random_series(rng, 5, Rat(0), Rat(3), 3, Rat(6))};
    const auto composed = F.eval_times(g, one);
    EXPECT_TRUE(agree_through_common_order(chain_rule_deriv(F, g, a), alpha_deriv(composed, a)));
  }
}

TEST(ChainRuleTest, IdentityComposition) {
  const Polynomial id(1, {{{1}, Rat(1)}});
  Rng rng(3);
  const std::vector<PuiseuxSeries> g{random_series(rng, 6, Rat(-1), Rat(4), 4, Rat(6))};
  EXPECT_TRUE(agree_through_common_order(chain_rule_deriv(id, g, AlphaBasis(1, 2)), alpha_deriv(g[0], AlphaBasis(1, 2))));
}

TEST(RiemannLiouvilleTest, MonomialCoefficients) {
  EXPECT_NEAR(rl_monomial_coeff(Rat(0), Rat(1, 2)), 1.0 / std::sqrt(std::numbers::pi), 1e-12);
  EXPECT_NEAR(rl_monomial_coeff(Rat(1), Rat(1)), 1.0, 1e-12);
  EXPECT_THROW(rl_monomial_coeff(Rat(-1), Rat(1, 2)), PreconditionError);
  EXPECT_THROW(rl_monomial_coeff(Rat(0), Rat(1)), PreconditionError);
}

TEST(RiemannLiouvilleTest, LeibnizDefectAgainstGammaClosedForm) {
  // Gamma(3)/Gamma(5/2) - 2/Gamma(3/2) = -4 / (3 sqrt(pi))
  const double oracle = -4.0 / (3.0 * std::sqrt(std::numbers::pi));
  const double defect = leibniz_defect_rl(Rat(1), Rat(1), Rat(1, 2));
  EXPECT_NEAR(defect, oracle, 1e-10);
  EXPECT_NE(defect, 0.0);
  EXPECT_TRUE(leibniz_defect_alpha(Rat(1), Rat(1)).is_zero());
  EXPECT_TRUE(leibniz_defect_alpha(Rat(7, 3), Rat(-2, 5)).is_zero());
}

}  // namespace
}  // namespace alphacalc
