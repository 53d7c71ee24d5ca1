#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "alphacalc/rat.hpp"

namespace alphacalc {

/// Per-variable truncation index; std::nullopt marks a variable in which the
/// series is an exact (Laurent) polynomial.
using TruncBound = std::optional<long>;

/// N-variable Puiseux series  sum c_(k1..kN) x1^(k1/n) ... xN^(kN/n)  with a
/// shared ramification n.
///
/// Exactness is box-shaped: a coefficient is known iff k_j < K_j for every
/// variable j with a finite bound. `lowest(j)` is a lower bound on the
/// x_j-index of every term, known or unknown, which is what products need to
/// propagate truncation correctly.
class MultiSeries {
 public:
  using Index = std::vector<long>;
  using TermMap = std::map<Index, Rat>;

  MultiSeries() = default;
  MultiSeries(std::size_t num_vars, long ramification, std::vector<TruncBound> truncation,
              std::vector<long> lowest, TermMap terms);

  /// Exact polynomial in every variable; lowest indices are min(0, stored).
  static MultiSeries polynomial(std::size_t num_vars, long ramification, TermMap terms);
  static MultiSeries constant(std::size_t num_vars, const Rat& c);
  /// The coordinate function x_j (0-based).
  static MultiSeries coordinate(std::size_t num_vars, std::size_t j);

  std::size_t num_vars() const { return num_vars_; }
  long ramification() const { return n_; }
  const std::vector<TruncBound>& truncation() const { return trunc_; }
  const std::vector<long>& lowest() const { return lowest_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_exact() const;

  /// Re-expressed over ramification n (a multiple of ramification()).
  MultiSeries refined(long n) const;

  friend bool operator==(const MultiSeries&, const MultiSeries&) = default;

 private:
  // Raw construction over an already-consistent state; skips reduction.
  struct Raw {};
  MultiSeries(Raw, std::size_t num_vars, long n, std::vector<TruncBound> trunc,
              std::vector<long> lowest, TermMap terms);

  std::size_t num_vars_ = 0;
  long n_ = 1;
  std::vector<TruncBound> trunc_;
  std::vector<long> lowest_;
  TermMap terms_;
};

MultiSeries add(const MultiSeries& f, const MultiSeries& g);
MultiSeries sub(const MultiSeries& f, const MultiSeries& g);
MultiSeries neg(const MultiSeries& f);
MultiSeries scale(const MultiSeries& f, const Rat& c);
MultiSeries mul(const MultiSeries& f, const MultiSeries& g);

inline MultiSeries operator+(const MultiSeries& f, const MultiSeries& g) { return add(f, g); }
inline MultiSeries operator-(const MultiSeries& f, const MultiSeries& g) { return sub(f, g); }
inline MultiSeries operator-(const MultiSeries& f) { return neg(f); }
inline MultiSeries operator*(const MultiSeries& f, const MultiSeries& g) { return mul(f, g); }

/// Equality modulo the common (componentwise minimum) truncation box.
bool agree_through_common_box(const MultiSeries& f, const MultiSeries& g);

}  // namespace alphacalc
