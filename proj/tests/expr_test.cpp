#include "alphacalc/expr.hpp"

#include <gtest/gtest.h>

#include <vector>

#include "alphacalc/errors.hpp"
#include "test_support.hpp"

namespace alphacalc {
namespace {

std::vector<std::pair<Rat, Rat>> pairs(const ExprAst& ast) {
  std::vector<std::pair<Rat, Rat>> out;
  for (const auto& t : ast.terms) out.emplace_back(t.exponent, t.coeff);
  return out;
}

TEST(ParseExpressionTest, Examples) {
  EXPECT_EQ(pairs(parse_expression("3*z^(1/2) - 2*z^(5/3)")),
            (std::vector<std::pair<Rat, Rat>>{{Rat(1, 2), Rat(3)}, {Rat(5, 3), Rat(-2)}}));
  EXPECT_EQ(pairs(parse_expression("z")), (std::vector<std::pair<Rat, Rat>>{{Rat(1), Rat(1)}}));
  EXPECT_EQ(pairs(parse_expression("1/2 + z^(-1)")),
            (std::vector<std::pair<Rat, Rat>>{{Rat(-1), Rat(1)}, {Rat(0), Rat(1, 2)}}));
}

TEST(ParseExpressionTest, WhitespaceSignsAndMerging) {
  EXPECT_EQ(pairs(parse_expression("  - z ^ ( 2 ) +4 * z^(2)- 1  ")),
            (std::vector<std::pair<Rat, Rat>>{{Rat(0), Rat(-1)}, {Rat(2), Rat(3)}}));
  EXPECT_TRUE(parse_expression("z - z").terms.empty());
  EXPECT_EQ(pairs(parse_expression("-3/4*z^(-1/2)")), (std::vector<std::pair<Rat, Rat>>{{Rat(-1, 2), Rat(-3, 4)}}));
}

TEST(ParseExpressionTest, Tail) {
  const auto ast = parse_expression("1 + O(z^(3/2))");
  ASSERT_TRUE(ast.order.has_value());
  EXPECT_EQ(*ast.order, Rat(3, 2));
  EXPECT_EQ(*parse_expression("0 + O(z)").order, Rat(1));
  EXPECT_FALSE(parse_expression("z").order.has_value());
}

TEST(ParseExpressionTest, SyntaxErrorsReportByteOffsets) {
  auto message = [](const char* src) {
    try {
      parse_expression(src);
    } catch (const InputError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  EXPECT_EQ(message(""), "syntax error at byte 0: empty expression");
  EXPECT_EQ(message("3*"), "syntax error at byte 2: expected 'z'");
  EXPECT_EQ(message("z^(1/0)"), "syntax error at byte 5: zero denominator");
  EXPECT_EQ(message("z + x"), "syntax error at byte 4: expected a coefficient or 'z'");
  EXPECT_EQ(message("z^1"), "syntax error at byte 2: expected '('");
  EXPECT_EQ(message("1 + O(z) + z"), "syntax error at byte 9: the O(...) tail must be the last term");
  EXPECT_EQ(message("2 3"), "syntax error at byte 2: expected '+' or '-'");
}

TEST(ToSeriesTest, DefaultAndExplicitOrder) {
  const auto f = to_series(parse_expression("z^(1/2)"), Rat(10));
  EXPECT_EQ(f, make_series({{Rat(1, 2), Rat(1)}}, Rat(10)));
  const auto g = to_series(parse_expression("z^(1/2) + O(z^(3))"), Rat(10));
  EXPECT_EQ(g.truncation_order(), Rat(3));
  EXPECT_THROW(to_series(parse_expression("z^(12)"), Rat(10)), InputError);
}

TEST(FormatTest, TextLayout) {
  EXPECT_EQ(format_text(PuiseuxSeries::zero(Rat(7, 3))), "0 + O(z^(7/3))");
  EXPECT_EQ(format_text(make_series({{Rat(1, 2), Rat(3)}}, Rat(3))), "3 * z^(1/2) + O(z^(3/1))");
  EXPECT_EQ(format_text(make_series({{Rat(-1), Rat(-1)}, {Rat(0), Rat(1, 2)}, {Rat(5, 3), Rat(-2)}}, Rat(2))),
            "-1 * z^(-1/1) + 1/2 - 2 * z^(5/3) + O(z^(2/1))");
  EXPECT_EQ(format_text(make_series({{Rat(1), Rat(1)}}, Rat(2)), "x"), "1 * x^(1/1) + O(x^(2/1))");
}

TEST(FormatTest, TextRoundTripIsAFixedPoint) {
  testing::Rng rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    const auto f = testing::random_series(rng, 8, Rat(-3), Rat(5), 6, Rat(6));
    const std::string text = format_text(f);
    const auto g = to_series(parse_expression(text), Rat(99));
    EXPECT_EQ(g, f) << text;
    EXPECT_EQ(format_text(g), text);
  }
}

TEST(FormatTest, MultiText) {
  const MultiSeries f(2, 2, {TruncBound(6), std::nullopt}, {0, 0}, {{{0, 0}, Rat(1)}, {{1, 2}, Rat(-3, 2)}});
  EXPECT_EQ(format_text(f), "1 - 3/2 * x1^(1/2) * x2^(1/1) + O(x1^(3/1))");
  EXPECT_EQ(format_text(MultiSeries::polynomial(2, 1, {})), "0");
}

TEST(FormatTest, Csv) {
  const auto f = make_series({{Rat(0), Rat(1, 2)}, {Rat(3, 2), Rat(-4)}}, Rat(5));
  EXPECT_EQ(format_csv(f), "exponent,num,den\n0/1,1,2\n3/2,-4,1\n");
  const std::vector<double> zs{0.25, 1.0};
  const std::vector<double> vs{0.5, 1.0};
  EXPECT_EQ(format_grid_csv(zs, vs), "z,f(z)\n0.25,0.5\n1,1\n");
  EXPECT_EQ(format_double(0.1), "0.10000000000000001");
}

TEST(FormatTest, LinearGrid) {
  EXPECT_EQ(linear_grid(0.25, 1.0, 4), (std::vector<double>{0.25, 0.5, 0.75, 1.0}));
  EXPECT_EQ(linear_grid(2.0, 3.0, 1), (std::vector<double>{2.0}));
  EXPECT_THROW(linear_grid(0.0, 1.0, 0), InputError);
}

}  // namespace
}  // namespace alphacalc
