#pragma once

#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "alphacalc/rat.hpp"

namespace alphacalc {

/// Truncated generalized Puiseux series  sum_k c_k z^(k/n)  about z = 0.
///
/// The series is exact modulo z^(K/n): every coefficient with index k < K is
/// known (absent means zero), everything at or above K is unknown. Finitely
/// many negative indices may be present (the principal part).
///
/// Values are kept in canonical form: zero coefficients are pruned, terms at
/// or above the truncation index are dropped, and the ramification is reduced
/// by the gcd of n, K and every stored index. Structural equality is therefore
/// mathematical equality of truncated series.
///
/// `Coeff` is `Rat` for the exact kernel and `double` for the few series whose
/// coefficients are irrational (the alpha-trigonometric functions).
template <typename Coeff>
class Series {
 public:
  using TermMap = std::map<long, Coeff>;

  /// Zero series, exact modulo z^0.
  Series() = default;
  Series(long ramification, long truncation_index, TermMap terms = {});

  static Series zero(const Rat& truncation_order);

  long ramification() const { return n_; }
  long truncation_index() const { return trunc_; }
  Rat truncation_order() const { return Rat(trunc_, n_); }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Lowest stored index, 0 for the zero series.
  long lowest_index() const { return terms_.empty() ? 0 : terms_.begin()->first; }

  /// Coefficient of z^exponent (zero when absent or not representable).
  Coeff coeff(const Rat& exponent) const;

  /// Terms and truncation index re-expressed over ramification `n`, which
  /// must be a multiple of ramification().
  TermMap terms_over(long n) const;
  long truncation_over(long n) const { return trunc_ * (n / n_); }

  friend bool operator==(const Series&, const Series&) = default;

 private:
  long n_ = 1;
  long trunc_ = 0;
  TermMap terms_;
};

using PuiseuxSeries = Series<Rat>;
using RealSeries = Series<double>;

/// A strictly positive evaluation point; fractional powers use the
/// principal real branch.
class EvalPoint {
 public:
  explicit EvalPoint(double value);
  double value() const { return value_; }

 private:
  double value_;
};

template <typename Coeff>
struct SeriesTerm {
  Rat exponent;
  Coeff coeff;
};

/// Builds a series from (exponent, coefficient) pairs. Throws InputError on
/// duplicate exponents or an exponent at or above `truncation_order`.
template <typename Coeff>
Series<Coeff> make_series(std::span<const SeriesTerm<Coeff>> terms, const Rat& truncation_order);

PuiseuxSeries make_series(std::initializer_list<std::pair<Rat, Rat>> terms,
                          const Rat& truncation_order);

template <typename Coeff>
Series<Coeff> add(const Series<Coeff>& f, const Series<Coeff>& g);
template <typename Coeff>
Series<Coeff> sub(const Series<Coeff>& f, const Series<Coeff>& g);
template <typename Coeff>
Series<Coeff> neg(const Series<Coeff>& f);
template <typename Coeff>
Series<Coeff> scale(const Series<Coeff>& f, const Coeff& c);
/// Cauchy product; the truncation is the largest one at which every
/// reported coefficient is exact.
template <typename Coeff>
Series<Coeff> mul(const Series<Coeff>& f, const Series<Coeff>& g);

template <typename Coeff>
Series<Coeff> operator+(const Series<Coeff>& f, const Series<Coeff>& g) { return add(f, g); }
template <typename Coeff>
Series<Coeff> operator-(const Series<Coeff>& f, const Series<Coeff>& g) { return sub(f, g); }
template <typename Coeff>
Series<Coeff> operator-(const Series<Coeff>& f) { return neg(f); }
template <typename Coeff>
Series<Coeff> operator*(const Series<Coeff>& f, const Series<Coeff>& g) { return mul(f, g); }

/// O(f) = k0/n; std::nullopt stands for +infinity (the zero series).
template <typename Coeff>
std::optional<Rat> order(const Series<Coeff>& f);

/// Lower bound on the exponent of every term, known or not: O(f) for a
/// nonzero series, the truncation order for the zero series.
template <typename Coeff>
Rat valuation_bound(const Series<Coeff>& f);

template <typename Coeff>
struct SplitSeries {
  Series<Coeff> principal;  // terms with negative exponent
  Series<Coeff> regular;    // terms with nonnegative exponent
};

template <typename Coeff>
SplitSeries<Coeff> split(const Series<Coeff>& f);

/// Drops every term at or above `order` (no-op if already tighter).
template <typename Coeff>
Series<Coeff> truncated(const Series<Coeff>& f, const Rat& order);

/// Equality of `f` and `g` modulo the smaller of their truncation orders.
template <typename Coeff>
bool agree_through_common_order(const Series<Coeff>& f, const Series<Coeff>& g);

/// sum c_k z^(k/n) over the stored terms in double precision.
template <typename Coeff>
double eval(const Series<Coeff>& f, EvalPoint z);

/// Evaluates at every point of `zs` using the vectorized Horner kernel.
template <typename Coeff>
std::vector<double> eval_grid(const Series<Coeff>& f, std::span<const double> zs);

RealSeries to_real(const PuiseuxSeries& f);

}  // namespace alphacalc
