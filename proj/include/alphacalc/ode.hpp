#pragma once

#include <optional>
#include <span>
#include <vector>

#include "alphacalc/calculus.hpp"
#include "alphacalc/series.hpp"

namespace alphacalc {

/// Linear constant-coefficient alpha-differential equation
///   sum_{l=0}^{M} a_l d_alpha^l f = h.
/// An absent forcing means h = 0 exactly.
class OdeSpec {
 public:
  OdeSpec(std::vector<Rat> coeffs, std::optional<PuiseuxSeries> forcing, AlphaBasis alpha);

  long order() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  const std::optional<PuiseuxSeries>& forcing() const { return forcing_; }
  const AlphaBasis& alpha() const { return alpha_; }

 private:
  std::vector<Rat> coeffs_;
  std::optional<PuiseuxSeries> forcing_;
  AlphaBasis alpha_;
};

/// The ordinary co-joint equation  sum_l a~_l F^(l)(x) = H(x).
struct CojointSpec {
  std::vector<Rat> coeffs;
  std::optional<PuiseuxSeries> forcing;  // ramification 1
};

/// Free leading coefficients c_0 .. c_{M*m-1} of the solution.
struct InitialData {
  std::vector<Rat> values;
};

/// Solves the equation by the indicial recurrence: for every j >= 0
///   sum_l a_l c_{j+lm} prod_{i<l} (j + lm - im)/n = h_j,
/// solved for c_{j+Mm}. `truncation_index` is over the ramification alpha.n();
/// the result is further capped where the forcing stops being known.
///
/// For m > 1 only initial coefficients at indices divisible by m are free:
/// any other nonzero entry would leave negative-exponent residual terms,
/// and is rejected with PreconditionError.
PuiseuxSeries indicial_residual_recurrence(const OdeSpec& spec, const InitialData& init,
                                           long truncation_index);

/// sum_l a_l d_alpha^l f - h.
PuiseuxSeries residual(const OdeSpec& spec, const PuiseuxSeries& f);

enum class CojointScaling {
  kMatched,  // a~_l = a_l alpha^l: coefficient lists coincide, also with forcing
  kPrinted,  // a~_l = a_l alpha^(l-1): matches only for homogeneous equations
};

/// Co-joint ordinary equation of an alpha-ODE with m = 1; forcing
/// coefficient h_k of z^(k/n) becomes the coefficient of x^k.
CojointSpec cojoint_map(const OdeSpec& spec, CojointScaling scaling = CojointScaling::kMatched);

/// Taylor coefficients C_0 .. C_{count-1} of the co-joint solution with
/// C_0 .. C_{M-1} = init, from the ordinary recurrence
///   sum_l a~_l C_{j+l} (j+l)!/j! = H_j.
/// Stops early where the forcing is unknown.
std::vector<Rat> solve_cojoint(const CojointSpec& spec, std::span<const Rat> init, long count);

/// Coefficient C_k of x^k becomes the coefficient of z^(k/n); the result is
/// exact modulo z^(coeffs.size()/n).
PuiseuxSeries lift_taylor_to_puiseux(std::span<const Rat> coeffs, long n);

/// Damped alpha-oscillator  d_alpha^2 f + 2d d_alpha f + omega^2 f = 0.
struct SecondOrderParams {
  Rat d;
  Rat omega;

  SecondOrderParams(Rat d, Rat omega);
  /// sqrt(omega^2 - d^2); only meaningful for the underdamped branch.
  double nu() const;
  /// sqrt(d^2 - omega^2), real only for the overdamped branch.
  double p() const;
  bool underdamped() const { return omega * omega > d * d; }
};

OdeSpec second_order_spec(const SecondOrderParams& params, const AlphaBasis& alpha);

/// Series sum c_k z^(k alpha) with c_0, c_1 given and
///   alpha^2 (k+1)(k+2) c_{k+2} + 2 d alpha (k+1) c_{k+1} + omega^2 c_k = 0.
/// `truncation_index` is over ramification alpha.n() and must exceed 2m.
PuiseuxSeries solve_second_order(const SecondOrderParams& params, const AlphaBasis& alpha,
                                 const Rat& c0, const Rat& c1, long truncation_index);

enum class ClosedForm { kF0, kF1, kG0, kG1 };

/// Closed forms of the underdamped solution basis and its alpha-derivatives,
/// with E = exp(-d z^a/a), theta = nu z^a/a:
///   f0 = E (cos theta + d/nu sin theta)     f1 = a/nu E sin theta
///   g0 = -omega^2/nu E sin theta            g1 = a/nu E (nu cos theta - d sin theta)
double second_order_closed_eval(const SecondOrderParams& params, const AlphaBasis& alpha,
                                ClosedForm which, EvalPoint z);

}  // namespace alphacalc
