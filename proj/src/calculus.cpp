#include "alphacalc/calculus.hpp"

#include <cmath>
#include <numeric>

#include "alphacalc/errors.hpp"

namespace alphacalc {

namespace {

Rat beta_times(long k, long n, const Rat& c) { return Rat(k, n) * c; }
double beta_times(long k, long n, double c) {
  return static_cast<double>(k) / static_cast<double>(n) * c;
}

// Index shift of alpha over ramification n (n must be a multiple of alpha.n()).
long alpha_shift(const AlphaBasis& alpha, long n) { return alpha.m() * (n / alpha.n()); }

}  // namespace

AlphaBasis::AlphaBasis(long m, long n) : m_(m), n_(n) {
  if (m <= 0 || n <= 0 || m > n) {
    throw InputError("alpha basis must satisfy 0 < m/n <= 1, got " + std::to_string(m) + "/" +
                     std::to_string(n));
  }
  if (std::gcd(m, n) != 1) {
    throw InputError("alpha basis m/n must be in lowest terms");
  }
}

AlphaBasis::AlphaBasis(const Rat& alpha)
    : AlphaBasis(to_index(Rat(alpha.num())), to_index(Rat(alpha.den()))) {}

AlphaBasis AlphaBasis::parse(std::string_view text) {
  // Parse numerator and denominator separately so that "2/4" is reported
  // rather than silently reduced.
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return AlphaBasis(Rat::parse(text));
  const Rat m = Rat::parse(text.substr(0, slash));
  const Rat n = Rat::parse(text.substr(slash + 1));
  if (m.den() != 1 || n.den() != 1 || n.is_zero()) throw InputError("invalid alpha '" + std::string(text) + "'");
  return AlphaBasis(to_index(m), to_index(n));
}

template <typename Coeff>
Series<Coeff> alpha_deriv(const Series<Coeff>& f, const AlphaBasis& alpha) {
  const long n = lcm_index(f.ramification(), alpha.n());
  const long shift = alpha_shift(alpha, n);
  typename Series<Coeff>::TermMap out;
  for (const auto& [k, c] : f.terms_over(n)) {
    if (k == 0) continue;
    out.emplace_hint(out.end(), k - shift, beta_times(k, n, c));
  }
  return Series<Coeff>(n, f.truncation_over(n) - shift, std::move(out));
}

template <typename Coeff>
Series<Coeff> alpha_deriv_iter(const Series<Coeff>& f, const AlphaBasis& alpha, long l) {
  if (l < 0) throw InputError("derivative order must be nonnegative");
  Series<Coeff> out = f;
  for (long i = 0; i < l; ++i) out = alpha_deriv(out, alpha);
  return out;
}

template Series<Rat> alpha_deriv<Rat>(const Series<Rat>&, const AlphaBasis&);
template Series<double> alpha_deriv<double>(const Series<double>&, const AlphaBasis&);
template Series<Rat> alpha_deriv_iter<Rat>(const Series<Rat>&, const AlphaBasis&, long);
template Series<double> alpha_deriv_iter<double>(const Series<double>&, const AlphaBasis&, long);

PuiseuxSeries alpha_integral(const PuiseuxSeries& f, const AlphaBasis& alpha) {
  const long n = lcm_index(f.ramification(), alpha.n());
  const long shift = alpha_shift(alpha, n);
  PuiseuxSeries::TermMap out;
  for (const auto& [k, c] : f.terms_over(n)) {
    if (k + shift == 0) {
      throw PreconditionError("cannot alpha-integrate z^(" + Rat(k, n).str() +
                              "): the exponent beta must satisfy beta + alpha != 0");
    }
    out.emplace_hint(out.end(), k + shift, c / Rat(k + shift, n));
  }
  return PuiseuxSeries(n, f.truncation_over(n) + shift, std::move(out));
}

MultiSeries alpha_partial(const MultiSeries& f, std::size_t var, const AlphaBasis& alpha) {
  if (var >= f.num_vars()) {
    throw InputError("variable index " + std::to_string(var) + " out of range for " +
                     std::to_string(f.num_vars()) + " variables");
  }
  const long n = lcm_index(f.ramification(), alpha.n());
  const MultiSeries r = f.refined(n);
  const long shift = alpha_shift(alpha, n);
  MultiSeries::TermMap out;
  for (const auto& [k, c] : r.terms()) {
    if (k[var] == 0) continue;
    MultiSeries::Index shifted(k);
    shifted[var] -= shift;
    out.emplace(std::move(shifted), Rat(k[var], n) * c);
  }
  std::vector<TruncBound> trunc(r.truncation());
  if (trunc[var]) *trunc[var] -= shift;
  std::vector<long> lowest(r.lowest());
  lowest[var] -= shift;
  return MultiSeries(f.num_vars(), n, std::move(trunc), std::move(lowest), std::move(out));
}

Polynomial::Polynomial(std::size_t num_args, TermMap terms) : num_args_(num_args) {
  for (auto& [e, c] : terms) {
    if (e.size() != num_args) throw InputError("polynomial exponent vector has the wrong length");
    if (!c.is_zero()) terms_.emplace(e, std::move(c));
  }
}

Polynomial Polynomial::partial(std::size_t k) const {
  if (k >= num_args_) throw InputError("polynomial argument index out of range");
  TermMap out;
  for (const auto& [e, c] : terms_) {
    if (e[k] == 0) continue;
    Exponents d(e);
    --d[k];
    auto [it, inserted] = out.emplace(d, c * Rat(static_cast<long>(e[k])));
    if (!inserted) it->second += c * Rat(static_cast<long>(e[k]));
  }
  return Polynomial(num_args_, std::move(out));
}

PuiseuxSeries Polynomial::eval_times(std::span<const PuiseuxSeries> args,
                                     const PuiseuxSeries& multiplier) const {
  if (args.size() != num_args_) throw InputError("wrong number of polynomial arguments");
  // powers[i][p] = args[i]^p, grown on demand
  std::vector<std::vector<PuiseuxSeries>> powers(num_args_);
  auto power = [&](std::size_t i, unsigned p) -> const PuiseuxSeries& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(args[i]);
    while (cache.size() < p) cache.push_back(mul(cache.back(), args[i]));
    return cache[p - 1];
  };
  std::optional<PuiseuxSeries> total;
  for (const auto& [e, c] : terms_) {
    PuiseuxSeries term = scale(multiplier, c);
    for (std::size_t i = 0; i < num_args_; ++i) {
      if (e[i] > 0) term = mul(term, power(i, e[i]));
    }
    total = total ? add(*total, term) : term;
  }
  if (!total) return PuiseuxSeries::zero(multiplier.truncation_order());
  return *total;
}

PuiseuxSeries chain_rule_deriv(const Polynomial& F, std::span<const PuiseuxSeries> g,
                               const AlphaBasis& alpha) {
  if (g.size() != F.num_args()) throw InputError("chain rule: argument count mismatch");
  std::optional<PuiseuxSeries> total;
  for (std::size_t k = 0; k < g.size(); ++k) {
    const PuiseuxSeries term = F.partial(k).eval_times(g, alpha_deriv(g[k], alpha));
    total = total ? add(*total, term) : term;
  }
  if (!total) throw InputError("chain rule needs at least one argument");
  return *total;
}

double rl_monomial_coeff(const Rat& beta, const Rat& alpha) {
  if (beta <= Rat(-1)) {
    throw PreconditionError("Riemann-Liouville monomial rule needs beta > -1, got " + beta.str());
  }
  const Rat lower = beta - alpha + Rat(1);
  if (lower.is_integer() && lower.sign() <= 0) {
    throw PreconditionError("Gamma pole: beta - alpha + 1 = " + lower.str());
  }
  return std::tgamma(beta.to_double() + 1.0) / std::tgamma(lower.to_double());
}

double leibniz_defect_rl(const Rat& beta1, const Rat& beta2, const Rat& alpha) {
  return rl_monomial_coeff(beta1 + beta2, alpha) - rl_monomial_coeff(beta1, alpha) -
         rl_monomial_coeff(beta2, alpha);
}

Rat leibniz_defect_alpha(const Rat& beta1, const Rat& beta2) { return (beta1 + beta2) - beta1 - beta2; }

}  // namespace alphacalc
