#include "alphacalc/ode.hpp"

#include <algorithm>
#include <cmath>

#include "alphacalc/errors.hpp"

namespace alphacalc {

namespace {

// prod_{i=0}^{l-1} (j + l*m - i*m) / n
Rat falling_product(long j, long l, long m, long n) {
  Rat p(1);
  for (long i = 0; i < l; ++i) p *= Rat(j + (l - i) * m, n);
  return p;
}

// (j+l)! / j!
Rat rising_factorial_ratio(long j, long l) {
  Rat p(1);
  for (long i = 1; i <= l; ++i) p *= Rat(j + i);
  return p;
}

}  // namespace

OdeSpec::OdeSpec(std::vector<Rat> coeffs, std::optional<PuiseuxSeries> forcing, AlphaBasis alpha)
    : coeffs_(std::move(coeffs)), forcing_(std::move(forcing)), alpha_(alpha) {
  if (coeffs_.size() < 2) throw InputError("an alpha-ODE needs order M >= 1 (at least two coefficients)");
  if (coeffs_.back().is_zero()) throw InputError("leading coefficient a_M must be nonzero");
  if (forcing_) {
    if (alpha_.n() % forcing_->ramification() != 0) {
      throw InputError("forcing ramification " + std::to_string(forcing_->ramification()) +
                       " does not divide the alpha denominator " + std::to_string(alpha_.n()));
    }
    if (forcing_->lowest_index() < 0) throw InputError("forcing must not have negative exponents");
  }
}

PuiseuxSeries indicial_residual_recurrence(const OdeSpec& spec, const InitialData& init,
                                           long truncation_index) {
  const long M = spec.order();
  const long m = spec.alpha().m();
  const long n = spec.alpha().n();
  const long lead = M * m;
  if (static_cast<long>(init.values.size()) != lead) {
    throw InputError("expected " + std::to_string(lead) + " initial coefficients, got " +
                     std::to_string(init.values.size()));
  }
  if (truncation_index <= lead) {
    throw InputError("truncation index must exceed M*m = " + std::to_string(lead));
  }
  for (long r = 0; r < lead; ++r) {
    if (r % m != 0 && !init.values[static_cast<std::size_t>(r)].is_zero()) {
      throw PreconditionError("initial coefficient c_" + std::to_string(r) +
                              " must be zero: only indices divisible by m are free");
    }
  }

  long trunc = truncation_index;
  PuiseuxSeries::TermMap h;
  if (spec.forcing()) {
    h = spec.forcing()->terms_over(n);
    trunc = std::min(trunc, spec.forcing()->truncation_over(n) + lead);
  }
  const auto& a = spec.coeffs();
  std::vector<Rat> c(static_cast<std::size_t>(std::max(trunc, lead)));
  std::copy(init.values.begin(), init.values.end(), c.begin());
  for (long j = 0; j + lead < trunc; ++j) {
    const auto hj = h.find(j);
    Rat rhs = hj == h.end() ? Rat(0) : hj->second;
    for (long l = 0; l < M; ++l) {
      const Rat& cl = c[static_cast<std::size_t>(j + l * m)];
      if (!cl.is_zero() && !a[l].is_zero()) rhs -= a[l] * cl * falling_product(j, l, m, n);
    }
    c[static_cast<std::size_t>(j + lead)] = rhs / (a[M] * falling_product(j, M, m, n));
  }
  PuiseuxSeries::TermMap terms;
  for (long k = 0; k < trunc; ++k) terms.emplace_hint(terms.end(), k, c[static_cast<std::size_t>(k)]);
  return PuiseuxSeries(n, trunc, std::move(terms));
}

PuiseuxSeries residual(const OdeSpec& spec, const PuiseuxSeries& f) {
  PuiseuxSeries derivative = f;
  PuiseuxSeries total = scale(f, spec.coeffs()[0]);
  for (long l = 1; l <= spec.order(); ++l) {
    derivative = alpha_deriv(derivative, spec.alpha());
    total = add(total, scale(derivative, spec.coeffs()[static_cast<std::size_t>(l)]));
  }
  if (spec.forcing()) total = sub(total, *spec.forcing());
  return total;
}

CojointSpec cojoint_map(const OdeSpec& spec, CojointScaling scaling) {
  if (spec.alpha().m() != 1) {
    throw PreconditionError("the co-joint mapping is defined only for alpha = 1/n (m = 1), got alpha = " +
                            spec.alpha().str());
  }
  const Rat alpha = spec.alpha().value();
  CojointSpec out;
  for (long l = 0; l <= spec.order(); ++l) {
    const long power = scaling == CojointScaling::kMatched ? l : l - 1;
    out.coeffs.push_back(spec.coeffs()[static_cast<std::size_t>(l)] * pow(alpha, power));
  }
  if (spec.forcing()) {
    const long n = spec.alpha().n();
    out.forcing = PuiseuxSeries(1, spec.forcing()->truncation_over(n), spec.forcing()->terms_over(n));
  }
  return out;
}

std::vector<Rat> solve_cojoint(const CojointSpec& spec, std::span<const Rat> init, long count) {
  const long M = static_cast<long>(spec.coeffs.size()) - 1;
  if (M < 1 || spec.coeffs.back().is_zero()) throw InputError("co-joint equation needs a nonzero leading coefficient");
  if (static_cast<long>(init.size()) != M) throw InputError("co-joint equation needs M initial values");
  long limit = count;
  if (spec.forcing) limit = std::min(limit, spec.forcing->truncation_index() + M);
  std::vector<Rat> C(init.begin(), init.end());
  for (long j = 0; j + M < limit; ++j) {
    Rat rhs = spec.forcing ? spec.forcing->coeff(Rat(j)) : Rat(0);
    for (long l = 0; l < M; ++l) {
      rhs -= spec.coeffs[static_cast<std::size_t>(l)] * C[static_cast<std::size_t>(j + l)] *
             rising_factorial_ratio(j, l);
    }
    C.push_back(rhs / (spec.coeffs[static_cast<std::size_t>(M)] * rising_factorial_ratio(j, M)));
  }
  if (static_cast<long>(C.size()) > limit) C.resize(static_cast<std::size_t>(std::max(0L, limit)));
  return C;
}

PuiseuxSeries lift_taylor_to_puiseux(std::span<const Rat> coeffs, long n) {
  PuiseuxSeries::TermMap terms;
  for (std::size_t k = 0; k < coeffs.size(); ++k) terms.emplace(static_cast<long>(k), coeffs[k]);
  return PuiseuxSeries(n, static_cast<long>(coeffs.size()), std::move(terms));
}

SecondOrderParams::SecondOrderParams(Rat d_in, Rat omega_in) : d(std::move(d_in)), omega(std::move(omega_in)) {
  if (omega.is_zero()) throw InputError("omega must be nonzero");
}

double SecondOrderParams::nu() const {
  return std::sqrt((omega * omega - d * d).to_double());
}

double SecondOrderParams::p() const {
  return std::sqrt((d * d - omega * omega).to_double());
}

OdeSpec second_order_spec(const SecondOrderParams& params, const AlphaBasis& alpha) {
  return OdeSpec({params.omega * params.omega, Rat(2) * params.d, Rat(1)}, std::nullopt, alpha);
}

PuiseuxSeries solve_second_order(const SecondOrderParams& params, const AlphaBasis& alpha,
                                 const Rat& c0, const Rat& c1, long truncation_index) {
  const long m = alpha.m();
  if (truncation_index <= 2 * m) {
    throw InputError("truncation index must exceed 2m = " + std::to_string(2 * m));
  }
  const Rat a = alpha.value();
  const Rat omega2 = params.omega * params.omega;
  // terms sit at z^(k alpha), i.e. index k*m over ramification n
  const long count = (truncation_index + m - 1) / m;
  std::vector<Rat> c{c0, c1};
  for (long k = 0; k + 2 < count; ++k) {
    const Rat next = -(Rat(2) * params.d * a * Rat(k + 1) * c[static_cast<std::size_t>(k + 1)] +
                       omega2 * c[static_cast<std::size_t>(k)]) /
                     (a * a * Rat((k + 1) * (k + 2)));
    c.push_back(next);
  }
  PuiseuxSeries::TermMap terms;
  for (long k = 0; k < count; ++k) terms.emplace_hint(terms.end(), k * m, c[static_cast<std::size_t>(k)]);
  return PuiseuxSeries(alpha.n(), truncation_index, std::move(terms));
}

double second_order_closed_eval(const SecondOrderParams& params, const AlphaBasis& alpha,
                                ClosedForm which, EvalPoint z) {
  if (!params.underdamped()) {
    throw PreconditionError("closed forms are only available for the underdamped branch omega^2 > d^2");
  }
  const double a = alpha.to_double();
  const double d = params.d.to_double();
  const double omega = params.omega.to_double();
  const double nu = params.nu();
  const double u = std::pow(z.value(), a) / a;
  const double envelope = std::exp(-d * u);
  const double s = std::sin(nu * u);
  const double co = std::cos(nu * u);
  switch (which) {
    case ClosedForm::kF0: return envelope * (co + d / nu * s);
    case ClosedForm::kF1: return a / nu * envelope * s;
    case ClosedForm::kG0: return -(omega * omega) / nu * envelope * s;
    case ClosedForm::kG1: return a / nu * envelope * (nu * co - d * s);
  }
  return 0.0;
}

}  // namespace alphacalc
