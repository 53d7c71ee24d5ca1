#include "alphacalc/series.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <set>

#include "alphacalc/errors.hpp"
#include "alphacalc/kernels/horner.hpp"

namespace alphacalc {

namespace {

bool is_zero_coeff(const Rat& c) { return c.is_zero(); }
bool is_zero_coeff(double c) { return c == 0.0; }

template <typename Coeff>
Coeff zero_coeff() {
  return Coeff(0);
}

double coeff_to_double(const Rat& c) { return c.to_double(); }
double coeff_to_double(double c) { return c; }

// Common ramification of two series together with both re-expressed over it.
template <typename Coeff>
struct Aligned {
  long n;
  typename Series<Coeff>::TermMap f, g;
  long f_trunc, g_trunc;
};

template <typename Coeff>
Aligned<Coeff> align(const Series<Coeff>& f, const Series<Coeff>& g) {
  const long n = lcm_index(f.ramification(), g.ramification());
  return {n, f.terms_over(n), g.terms_over(n), f.truncation_over(n), g.truncation_over(n)};
}

// Index of `exponent` over ramification n, or nullopt when not representable.
std::optional<long> index_of(const Rat& exponent, long n) {
  const Rat scaled = exponent * Rat(n);
  if (!scaled.is_integer()) return std::nullopt;
  return to_index(scaled);
}

// floor(x) for a rational truncation order
long floor_index(const Rat& x) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), x.num().get_mpz_t(), x.den().get_mpz_t());
  return to_index(Rat(q));
}

// Dense coefficients c_(k0), c_(k0+1), ..., so that with w = z^(1/n)
// f(z) = w^k0 * sum_j dense[j] w^j.
template <typename Coeff>
std::vector<double> dense_coefficients(const Series<Coeff>& f) {
  std::vector<double> dense;
  if (f.is_zero()) return dense;
  const long lo = f.terms().begin()->first;
  const long hi = f.terms().rbegin()->first;
  dense.assign(static_cast<std::size_t>(hi - lo + 1), 0.0);
  for (const auto& [k, c] : f.terms()) dense[static_cast<std::size_t>(k - lo)] = coeff_to_double(c);
  return dense;
}

double root_of(double z, long n) {
  if (n == 1) return z;
  if (n == 2) return std::sqrt(z);
  if (n == 3) return std::cbrt(z);
  return std::pow(z, 1.0 / static_cast<double>(n));
}

}  // namespace

EvalPoint::EvalPoint(double value) : value_(value) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw PreconditionError("evaluation point must be a finite z > 0");
  }
}

template <typename Coeff>
Series<Coeff>::Series(long ramification, long truncation_index, TermMap terms)
    : n_(ramification), trunc_(truncation_index) {
  if (ramification < 1) throw InputError("ramification must be >= 1");
  for (auto& [k, c] : terms) {
    if (k < trunc_ && !is_zero_coeff(c)) terms_.emplace(k, std::move(c));
  }
  long g = std::gcd(n_, trunc_);
  for (const auto& [k, c] : terms_) g = std::gcd(g, k);
  if (g > 1) {
    n_ /= g;
    trunc_ /= g;
    TermMap reduced;
    for (auto& [k, c] : terms_) reduced.emplace_hint(reduced.end(), k / g, std::move(c));
    terms_ = std::move(reduced);
  }
}

template <typename Coeff>
Series<Coeff> Series<Coeff>::zero(const Rat& truncation_order) {
  return Series(to_index(Rat(truncation_order.den())), to_index(Rat(truncation_order.num())));
}

template <typename Coeff>
Coeff Series<Coeff>::coeff(const Rat& exponent) const {
  const auto k = index_of(exponent, n_);
  if (!k) return zero_coeff<Coeff>();
  const auto it = terms_.find(*k);
  return it == terms_.end() ? zero_coeff<Coeff>() : it->second;
}

template <typename Coeff>
typename Series<Coeff>::TermMap Series<Coeff>::terms_over(long n) const {
  if (n % n_ != 0) throw InputError("ramification refinement must be a multiple");
  const long factor = n / n_;
  if (factor == 1) return terms_;
  TermMap out;
  for (const auto& [k, c] : terms_) out.emplace_hint(out.end(), k * factor, c);
  return out;
}

template <typename Coeff>
Series<Coeff> make_series(std::span<const SeriesTerm<Coeff>> terms, const Rat& truncation_order) {
  long n = to_index(Rat(truncation_order.den()));
  std::set<Rat> seen;
  for (const auto& t : terms) {
    if (!seen.insert(t.exponent).second) {
      throw InputError("duplicate exponent " + t.exponent.str());
    }
    if (t.exponent >= truncation_order) {
      throw InputError("exponent " + t.exponent.str() + " is not below the truncation order " +
                       truncation_order.str());
    }
    n = lcm_index(n, to_index(Rat(t.exponent.den())));
  }
  typename Series<Coeff>::TermMap map;
  for (const auto& t : terms) map.emplace(*index_of(t.exponent, n), t.coeff);
  return Series<Coeff>(n, *index_of(truncation_order, n), std::move(map));
}

PuiseuxSeries make_series(std::initializer_list<std::pair<Rat, Rat>> terms,
                          const Rat& truncation_order) {
  std::vector<SeriesTerm<Rat>> list;
  for (const auto& [e, c] : terms) list.push_back({e, c});
  return make_series<Rat>(list, truncation_order);
}

template <typename Coeff>
Series<Coeff> add(const Series<Coeff>& f, const Series<Coeff>& g) {
  auto a = align(f, g);
  for (const auto& [k, c] : a.g) {
    auto [it, inserted] = a.f.emplace(k, c);
    if (!inserted) it->second += c;
  }
  return Series<Coeff>(a.n, std::min(a.f_trunc, a.g_trunc), std::move(a.f));
}

template <typename Coeff>
Series<Coeff> neg(const Series<Coeff>& f) {
  auto terms = f.terms();
  for (auto& [k, c] : terms) c = -c;
  return Series<Coeff>(f.ramification(), f.truncation_index(), std::move(terms));
}

template <typename Coeff>
Series<Coeff> sub(const Series<Coeff>& f, const Series<Coeff>& g) {
  return add(f, neg(g));
}

template <typename Coeff>
Series<Coeff> scale(const Series<Coeff>& f, const Coeff& c) {
  auto terms = f.terms();
  for (auto& [k, v] : terms) v *= c;
  return Series<Coeff>(f.ramification(), f.truncation_index(), std::move(terms));
}

template <typename Coeff>
Series<Coeff> mul(const Series<Coeff>& f, const Series<Coeff>& g) {
  const auto a = align(f, g);
  const long f_low = f.is_zero() ? a.f_trunc : a.f.begin()->first;
  const long g_low = g.is_zero() ? a.g_trunc : a.g.begin()->first;
  const long trunc = std::min(a.f_trunc + g_low, a.g_trunc + f_low);
  typename Series<Coeff>::TermMap out;
  for (const auto& [i, ci] : a.f) {
    for (const auto& [j, cj] : a.g) {
      if (i + j >= trunc) break;
      auto [it, inserted] = out.emplace(i + j, ci * cj);
      if (!inserted) it->second += ci * cj;
    }
  }
  return Series<Coeff>(a.n, trunc, std::move(out));
}

template <typename Coeff>
std::optional<Rat> order(const Series<Coeff>& f) {
  if (f.is_zero()) return std::nullopt;
  return Rat(f.lowest_index(), f.ramification());
}

template <typename Coeff>
Rat valuation_bound(const Series<Coeff>& f) {
  return f.is_zero() ? f.truncation_order() : Rat(f.lowest_index(), f.ramification());
}

template <typename Coeff>
SplitSeries<Coeff> split(const Series<Coeff>& f) {
  typename Series<Coeff>::TermMap neg_part, pos_part;
  for (const auto& [k, c] : f.terms()) (k < 0 ? neg_part : pos_part).emplace(k, c);
  return {Series<Coeff>(f.ramification(), f.truncation_index(), std::move(neg_part)),
          Series<Coeff>(f.ramification(), f.truncation_index(), std::move(pos_part))};
}

template <typename Coeff>
Series<Coeff> truncated(const Series<Coeff>& f, const Rat& order) {
  if (order >= f.truncation_order()) return f;
  const long n = lcm_index(f.ramification(), to_index(Rat(order.den())));
  return Series<Coeff>(n, floor_index(order * Rat(n)), f.terms_over(n));
}

template <typename Coeff>
bool agree_through_common_order(const Series<Coeff>& f, const Series<Coeff>& g) {
  const Rat common = std::min(f.truncation_order(), g.truncation_order());
  return truncated(f, common) == truncated(g, common);
}

template <typename Coeff>
double eval(const Series<Coeff>& f, EvalPoint z) {
  const double zs[1] = {z.value()};
  return eval_grid(f, zs).front();
}

template <typename Coeff>
std::vector<double> eval_grid(const Series<Coeff>& f, std::span<const double> zs) {
  std::vector<double> w(zs.size());
  for (std::size_t i = 0; i < zs.size(); ++i) {
    w[i] = root_of(EvalPoint(zs[i]).value(), f.ramification());
  }
  std::vector<double> out(zs.size(), 0.0);
  if (f.is_zero()) return out;
  const auto dense = dense_coefficients(f);
  kernels::horner(dense, w, out);
  const long low = f.lowest_index();
  if (low != 0) {
    for (std::size_t i = 0; i < out.size(); ++i) out[i] *= std::pow(w[i], static_cast<double>(low));
  }
  return out;
}

RealSeries to_real(const PuiseuxSeries& f) {
  RealSeries::TermMap terms;
  for (const auto& [k, c] : f.terms()) terms.emplace(k, c.to_double());
  return RealSeries(f.ramification(), f.truncation_index(), std::move(terms));
}

#define ALPHACALC_INSTANTIATE_SERIES(C)                                                      \
  template class Series<C>;                                                                  \
  template Series<C> make_series<C>(std::span<const SeriesTerm<C>>, const Rat&);             \
  template Series<C> add<C>(const Series<C>&, const Series<C>&);                             \
  template Series<C> sub<C>(const Series<C>&, const Series<C>&);                             \
  template Series<C> neg<C>(const Series<C>&);                                               \
  template Series<C> scale<C>(const Series<C>&, const C&);                                   \
  template Series<C> mul<C>(const Series<C>&, const Series<C>&);                             \
  template std::optional<Rat> order<C>(const Series<C>&);                                    \
  template Rat valuation_bound<C>(const Series<C>&);                                         \
  template SplitSeries<C> split<C>(const Series<C>&);                                        \
  template Series<C> truncated<C>(const Series<C>&, const Rat&);                             \
  template bool agree_through_common_order<C>(const Series<C>&, const Series<C>&);           \
  template double eval<C>(const Series<C>&, EvalPoint);                                      \
  template std::vector<double> eval_grid<C>(const Series<C>&, std::span<const double>);

ALPHACALC_INSTANTIATE_SERIES(Rat)
ALPHACALC_INSTANTIATE_SERIES(double)

#undef ALPHACALC_INSTANTIATE_SERIES

}  // namespace alphacalc
