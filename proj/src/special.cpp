#include "alphacalc/special.hpp"

#include <cmath>
#include <numbers>
#include <optional>

#include "alphacalc/errors.hpp"

namespace alphacalc {

namespace {

// Exact integer r with r^n = v, if any.
std::optional<mpz_class> exact_root(const mpz_class& v, long n) {
  mpz_class r;
  if (mpz_root(r.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(n)) == 0) return std::nullopt;
  return r;
}

std::optional<Rat> exact_rational_root(const Rat& v, long n) {
  const auto num = exact_root(v.num(), n);
  const auto den = exact_root(v.den(), n);
  if (!num || !den) return std::nullopt;
  return Rat(*num, *den);
}

long term_count(const AlphaBasis& alpha, long truncation_index) {
  if (truncation_index < 1) throw InputError("truncation index must be >= 1");
  return (truncation_index + alpha.m() - 1) / alpha.m();
}

// cos/sin(pi t / (2n)) with exact values at multiples of pi/2.
double quarter_turn(TrigKind kind, long t, long n) {
  const long period = 4 * n;
  t %= period;
  if (t < 0) t += period;
  if (t % n == 0) {
    static constexpr double kCos[] = {1.0, 0.0, -1.0, 0.0};
    static constexpr double kSin[] = {0.0, 1.0, 0.0, -1.0};
    const long q = t / n;
    return kind == TrigKind::kCos ? kCos[q] : kSin[q];
  }
  const double angle = std::numbers::pi * static_cast<double>(t) / static_cast<double>(2 * n);
  return kind == TrigKind::kCos ? std::cos(angle) : std::sin(angle);
}

}  // namespace

PuiseuxSeries e_alpha_series(const AlphaBasis& alpha, long truncation_index) {
  const long count = term_count(alpha, truncation_index);
  const Rat a = alpha.value();
  PuiseuxSeries::TermMap terms;
  Rat c(1);
  for (long k = 0; k < count; ++k) {
    terms.emplace_hint(terms.end(), k * alpha.m(), c);
    c /= a * Rat(k + 1);
  }
  return PuiseuxSeries(alpha.n(), truncation_index, std::move(terms));
}

double e_alpha_eval(const AlphaBasis& alpha, EvalPoint z) {
  const double a = alpha.to_double();
  return std::exp(std::pow(z.value(), a) / a);
}

PuiseuxSeries scaled_e_alpha_residual(const AlphaBasis& alpha, const Rat& lambda,
                                      long truncation_index) {
  if (lambda.sign() <= 0) throw PreconditionError("lambda must be positive");
  const long count = term_count(alpha, truncation_index);
  const long m = alpha.m();
  const Rat a = alpha.value();
  PuiseuxSeries::TermMap terms;
  Rat lambda_alpha;
  if (const auto root = exact_rational_root(lambda, alpha.n())) {
    // E(z/lambda) coefficient: 1 / (k! a^k root^(k m))
    lambda_alpha = pow(*root, m);
    Rat c(1);
    for (long k = 0; k < count; ++k) {
      terms.emplace_hint(terms.end(), k * m, c);
      c /= a * Rat(k + 1) * lambda_alpha;
    }
  } else {
    const double lam = lambda.to_double();
    const double ad = alpha.to_double();
    lambda_alpha = Rat::from_double(std::pow(lam, ad));
    for (long k = 0; k < count; ++k) {
      const double c = 1.0 / (std::tgamma(static_cast<double>(k) + 1.0) * std::pow(ad, static_cast<double>(k)) *
                              std::pow(lam, ad * static_cast<double>(k)));
      terms.emplace_hint(terms.end(), k * m, Rat::from_double(c));
    }
  }
  const PuiseuxSeries scaled(alpha.n(), truncation_index, std::move(terms));
  return sub(scale(alpha_deriv(scaled, alpha), lambda_alpha), scaled);
}

RealSeries trig_alpha_series(TrigKind kind, const AlphaBasis& alpha, long truncation_index, long phase) {
  const long count = term_count(alpha, truncation_index);
  const double a = alpha.to_double();
  RealSeries::TermMap terms;
  double magnitude = 1.0;  // 1 / (k! a^k)
  for (long k = 0; k < count; ++k) {
    const double factor = quarter_turn(kind, alpha.m() * (k + phase), alpha.n());
    terms.emplace_hint(terms.end(), k * alpha.m(), factor * magnitude);
    magnitude /= a * static_cast<double>(k + 1);
  }
  return RealSeries(alpha.n(), truncation_index, std::move(terms));
}

double trig_alpha_eval(TrigKind kind, const AlphaBasis& alpha, EvalPoint z) {
  const double a = alpha.to_double();
  const double u = std::pow(z.value(), a) / a;
  const double c = quarter_turn(TrigKind::kCos, alpha.m(), alpha.n());
  const double s = quarter_turn(TrigKind::kSin, alpha.m(), alpha.n());
  const double envelope = std::exp(u * c);
  return envelope * (kind == TrigKind::kCos ? std::cos(u * s) : std::sin(u * s));
}

double semigroup_defect(const AlphaBasis& alpha, EvalPoint z1, EvalPoint z2) {
  return e_alpha_eval(alpha, EvalPoint(z1.value() + z2.value())) -
         e_alpha_eval(alpha, z1) * e_alpha_eval(alpha, z2);
}

}  // namespace alphacalc
