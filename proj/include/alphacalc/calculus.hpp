#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "alphacalc/multi_series.hpp"
#include "alphacalc/rat.hpp"
#include "alphacalc/series.hpp"

namespace alphacalc {

/// Basis alpha = m/n of the alpha-derivative, 0 < m <= n, gcd(m, n) = 1.
class AlphaBasis {
 public:
  AlphaBasis(long m, long n);
  explicit AlphaBasis(const Rat& alpha);
  /// Accepts "m/n" or "1".
  static AlphaBasis parse(std::string_view text);

  long m() const { return m_; }
  long n() const { return n_; }
  Rat value() const { return Rat(m_, n_); }
  double to_double() const { return static_cast<double>(m_) / static_cast<double>(n_); }
  std::string str() const { return value().str(); }

  friend bool operator==(const AlphaBasis&, const AlphaBasis&) = default;

 private:
  long m_;
  long n_;
};

/// Term-wise  c z^beta -> beta c z^(beta - alpha);  the constant term
/// vanishes and the truncation order drops by alpha.
template <typename Coeff>
Series<Coeff> alpha_deriv(const Series<Coeff>& f, const AlphaBasis& alpha);

/// l successive alpha-derivatives.
template <typename Coeff>
Series<Coeff> alpha_deriv_iter(const Series<Coeff>& f, const AlphaBasis& alpha, long l);

/// Indefinite alpha-integral  c z^beta -> c z^(beta + alpha) / (beta + alpha),
/// without an integration constant. A term with beta = -alpha raises
/// PreconditionError.
PuiseuxSeries alpha_integral(const PuiseuxSeries& f, const AlphaBasis& alpha);

/// alpha-derivative with respect to variable `var` (0-based).
MultiSeries alpha_partial(const MultiSeries& f, std::size_t var, const AlphaBasis& alpha);

/// Polynomial with rational coefficients in r formal arguments and
/// nonnegative integer exponents.
class Polynomial {
 public:
  using Exponents = std::vector<unsigned>;
  using TermMap = std::map<Exponents, Rat>;

  Polynomial(std::size_t num_args, TermMap terms);

  std::size_t num_args() const { return num_args_; }
  const TermMap& terms() const { return terms_; }

  /// Ordinary partial derivative with respect to argument k.
  Polynomial partial(std::size_t k) const;

  /// P(args) * multiplier, evaluated in the Puiseux ring. The multiplier
  /// absorbs constant monomials so no constant series is ever materialized.
  PuiseuxSeries eval_times(std::span<const PuiseuxSeries> args,
                           const PuiseuxSeries& multiplier) const;

 private:
  std::size_t num_args_;
  TermMap terms_;
};

/// d_alpha F(g_1..g_r) = sum_k (dF/du_k)(g) * d_alpha g_k.
PuiseuxSeries chain_rule_deriv(const Polynomial& F, std::span<const PuiseuxSeries> g,
                               const AlphaBasis& alpha);

/// Riemann-Liouville monomial coefficient Gamma(beta + 1) / Gamma(beta - alpha + 1).
double rl_monomial_coeff(const Rat& beta, const Rat& alpha);

/// C*(b1 + b2, a) - C*(b1, a) - C*(b2, a): nonzero values witness that the
/// Riemann-Liouville derivative breaks the binomial Leibniz rule.
double leibniz_defect_rl(const Rat& beta1, const Rat& beta2, const Rat& alpha);

/// The same defect for the alpha-derivative, whose monomial coefficient is
/// beta itself: (b1 + b2) - b1 - b2, identically zero.
Rat leibniz_defect_alpha(const Rat& beta1, const Rat& beta2);

}  // namespace alphacalc
