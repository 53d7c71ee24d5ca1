#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "alphacalc/multi_series.hpp"
#include "alphacalc/series.hpp"

// Surface syntax for truncated series.
//
//   expr  := term (('+' | '-') term)* [('+' | '-') tail]
//   term  := rat ['*' pow] | pow
//   pow   := 'z' ['^' '(' rat ')']
//   rat   := ['-'] int ['/' int]
//   tail  := 'O' '(' pow ')'
//
// A leading '-' before the first term is accepted. Whitespace is ignored.
// The optional tail is what text emission writes; parsing it back recovers
// the truncation order.

namespace alphacalc {

struct ExprTerm {
  Rat exponent;
  Rat coeff;
};

struct ExprAst {
  /// Sorted by exponent, duplicates merged, zero sums kept out.
  std::vector<ExprTerm> terms;
  /// Truncation order given by an O(z^q) tail, if any.
  std::optional<Rat> order;
};

/// Throws InputError naming the byte offset of the first syntax error.
ExprAst parse_expression(std::string_view src);

/// Series of the expression, exact modulo z^order where order is the tail's
/// order if present and `default_order` otherwise.
PuiseuxSeries to_series(const ExprAst& ast, const Rat& default_order);

/// "c * z^(p/q)" terms in ascending exponent joined by " + " / " - ", then
/// " + O(z^(K/n))". Constant terms are written bare.
std::string format_text(const PuiseuxSeries& f, std::string_view var = "z");
/// Same layout with coefficients printed to 17 significant digits.
std::string format_text(const RealSeries& f);
/// "c * x1^(p/q) * x2^(p/q)" terms in index order, then one
/// " + O(xj^(K/n))" per bounded variable.
std::string format_text(const MultiSeries& f);

/// "exponent,num,den" header and one row per term.
std::string format_csv(const PuiseuxSeries& f);
/// "exponent,value" header and one row per term.
std::string format_csv(const RealSeries& f);
/// "z,f(z)" header and one row per grid point.
std::string format_grid_csv(std::span<const double> zs, std::span<const double> values);

/// 17 significant digits, locale independent.
std::string format_double(double v);

/// start + (stop - start) i / (steps - 1) for i in [0, steps).
std::vector<double> linear_grid(double start, double stop, long steps);

}  // namespace alphacalc
