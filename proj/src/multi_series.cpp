#include "alphacalc/multi_series.hpp"

#include <algorithm>
#include <numeric>

#include "alphacalc/errors.hpp"

namespace alphacalc {

namespace {

TruncBound min_bound(TruncBound a, TruncBound b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

TruncBound shifted(TruncBound a, long by) {
  if (!a) return a;
  return *a + by;
}

bool inside_box(const MultiSeries::Index& k, const std::vector<TruncBound>& trunc) {
  for (std::size_t j = 0; j < k.size(); ++j) {
    if (trunc[j] && k[j] >= *trunc[j]) return false;
  }
  return true;
}

void check_same_vars(const MultiSeries& f, const MultiSeries& g) {
  if (f.num_vars() != g.num_vars()) {
    throw InputError("multivariate series have different numbers of variables");
  }
}

}  // namespace

MultiSeries::MultiSeries(Raw, std::size_t num_vars, long n, std::vector<TruncBound> trunc,
                         std::vector<long> lowest, TermMap terms)
    : num_vars_(num_vars),
      n_(n),
      trunc_(std::move(trunc)),
      lowest_(std::move(lowest)),
      terms_(std::move(terms)) {}

MultiSeries::MultiSeries(std::size_t num_vars, long ramification, std::vector<TruncBound> truncation,
                         std::vector<long> lowest, TermMap terms)
    : num_vars_(num_vars), n_(ramification), trunc_(std::move(truncation)), lowest_(std::move(lowest)) {
  if (ramification < 1) throw InputError("ramification must be >= 1");
  if (trunc_.size() != num_vars_ || lowest_.size() != num_vars_) {
    throw InputError("truncation/lowest vectors must have one entry per variable");
  }
  for (auto& [k, c] : terms) {
    if (k.size() != num_vars_) throw InputError("multi-index has the wrong number of variables");
    if (c.is_zero() || !inside_box(k, trunc_)) continue;
    for (std::size_t j = 0; j < num_vars_; ++j) lowest_[j] = std::min(lowest_[j], k[j]);
    terms_.emplace(k, std::move(c));
  }
  long g = n_;
  for (std::size_t j = 0; j < num_vars_; ++j) {
    if (trunc_[j]) g = std::gcd(g, *trunc_[j]);
    g = std::gcd(g, lowest_[j]);
  }
  for (const auto& [k, c] : terms_) {
    for (long kj : k) g = std::gcd(g, kj);
  }
  if (g > 1) {
    n_ /= g;
    for (auto& t : trunc_) {
      if (t) *t /= g;
    }
    for (auto& l : lowest_) l /= g;
    TermMap reduced;
    for (auto& [k, c] : terms_) {
      Index r(k);
      for (auto& kj : r) kj /= g;
      reduced.emplace_hint(reduced.end(), std::move(r), std::move(c));
    }
    terms_ = std::move(reduced);
  }
}

MultiSeries MultiSeries::polynomial(std::size_t num_vars, long ramification, TermMap terms) {
  return MultiSeries(num_vars, ramification, std::vector<TruncBound>(num_vars),
                     std::vector<long>(num_vars, 0), std::move(terms));
}

MultiSeries MultiSeries::constant(std::size_t num_vars, const Rat& c) {
  return polynomial(num_vars, 1, {{Index(num_vars, 0), c}});
}

MultiSeries MultiSeries::coordinate(std::size_t num_vars, std::size_t j) {
  Index k(num_vars, 0);
  k.at(j) = 1;
  return polynomial(num_vars, 1, {{k, Rat(1)}});
}

bool MultiSeries::is_exact() const {
  return std::none_of(trunc_.begin(), trunc_.end(), [](const TruncBound& t) { return t.has_value(); });
}

MultiSeries MultiSeries::refined(long n) const {
  if (n % n_ != 0) throw InputError("ramification refinement must be a multiple");
  const long factor = n / n_;
  if (factor == 1) return *this;
  std::vector<TruncBound> trunc(trunc_);
  for (auto& t : trunc) {
    if (t) *t *= factor;
  }
  std::vector<long> lowest(lowest_);
  for (auto& l : lowest) l *= factor;
  TermMap terms;
  for (const auto& [k, c] : terms_) {
    Index r(k);
    for (auto& kj : r) kj *= factor;
    terms.emplace_hint(terms.end(), std::move(r), c);
  }
  return MultiSeries(Raw{}, num_vars_, n, std::move(trunc), std::move(lowest), std::move(terms));
}

MultiSeries add(const MultiSeries& f, const MultiSeries& g) {
  check_same_vars(f, g);
  const long n = lcm_index(f.ramification(), g.ramification());
  const MultiSeries a = f.refined(n);
  const MultiSeries b = g.refined(n);
  std::vector<TruncBound> trunc(f.num_vars());
  std::vector<long> lowest(f.num_vars());
  for (std::size_t j = 0; j < f.num_vars(); ++j) {
    trunc[j] = min_bound(a.truncation()[j], b.truncation()[j]);
    lowest[j] = std::min(a.lowest()[j], b.lowest()[j]);
  }
  MultiSeries::TermMap terms(a.terms());
  for (const auto& [k, c] : b.terms()) {
    auto [it, inserted] = terms.emplace(k, c);
    if (!inserted) it->second += c;
  }
  return MultiSeries(f.num_vars(), n, std::move(trunc), std::move(lowest), std::move(terms));
}

MultiSeries neg(const MultiSeries& f) { return scale(f, Rat(-1)); }

MultiSeries sub(const MultiSeries& f, const MultiSeries& g) { return add(f, neg(g)); }

MultiSeries scale(const MultiSeries& f, const Rat& c) {
  MultiSeries::TermMap terms(f.terms());
  for (auto& [k, v] : terms) v *= c;
  return MultiSeries(f.num_vars(), f.ramification(), f.truncation(), f.lowest(), std::move(terms));
}

MultiSeries mul(const MultiSeries& f, const MultiSeries& g) {
  check_same_vars(f, g);
  const std::size_t vars = f.num_vars();
  const long n = lcm_index(f.ramification(), g.ramification());
  const MultiSeries a = f.refined(n);
  const MultiSeries b = g.refined(n);
  std::vector<TruncBound> trunc(vars);
  std::vector<long> lowest(vars);
  for (std::size_t j = 0; j < vars; ++j) {
    trunc[j] = min_bound(shifted(a.truncation()[j], b.lowest()[j]),
                         shifted(b.truncation()[j], a.lowest()[j]));
    lowest[j] = a.lowest()[j] + b.lowest()[j];
  }
  MultiSeries::TermMap terms;
  MultiSeries::Index k(vars);
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      for (std::size_t j = 0; j < vars; ++j) k[j] = ka[j] + kb[j];
      if (!inside_box(k, trunc)) continue;
      auto [it, inserted] = terms.emplace(k, ca * cb);
      if (!inserted) it->second += ca * cb;
    }
  }
  return MultiSeries(vars, n, std::move(trunc), std::move(lowest), std::move(terms));
}

bool agree_through_common_box(const MultiSeries& f, const MultiSeries& g) {
  check_same_vars(f, g);
  const long n = lcm_index(f.ramification(), g.ramification());
  const MultiSeries a = f.refined(n);
  const MultiSeries b = g.refined(n);
  std::vector<TruncBound> trunc(f.num_vars());
  for (std::size_t j = 0; j < f.num_vars(); ++j) {
    trunc[j] = min_bound(a.truncation()[j], b.truncation()[j]);
  }
  auto restrict = [&](const MultiSeries& s) {
    MultiSeries::TermMap out;
    for (const auto& [k, c] : s.terms()) {
      if (inside_box(k, trunc)) out.emplace(k, c);
    }
    return out;
  };
  return restrict(a) == restrict(b);
}

}  // namespace alphacalc
