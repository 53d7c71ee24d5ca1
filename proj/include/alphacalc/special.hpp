#pragma once

#include "alphacalc/calculus.hpp"
#include "alphacalc/series.hpp"

namespace alphacalc {

enum class TrigKind { kCos, kSin };

/// E_alpha(z) = sum_k (z^alpha/alpha)^k / k!, exact coefficients
/// 1/(k! alpha^k) at z^(k alpha). `truncation_index` is over ramification
/// alpha.n().
PuiseuxSeries e_alpha_series(const AlphaBasis& alpha, long truncation_index);

/// exp(z^alpha / alpha).
double e_alpha_eval(const AlphaBasis& alpha, EvalPoint z);

/// lambda^alpha d_alpha E_alpha(z/lambda) - E_alpha(z/lambda). Exact when
/// lambda^(1/n) is rational; otherwise each coefficient of E_alpha(z/lambda)
/// and the factor lambda^alpha are rounded from double precision.
PuiseuxSeries scaled_e_alpha_residual(const AlphaBasis& alpha, const Rat& lambda,
                                      long truncation_index);

/// C_alpha / S_alpha series: cos or sin(alpha pi k/2) / (k! alpha^k) at z^(k alpha).
/// `phase` shifts k -> k + phase inside the trigonometric factor, which is
/// what an alpha-derivative does to these series.
RealSeries trig_alpha_series(TrigKind kind, const AlphaBasis& alpha, long truncation_index,
                             long phase = 0);

/// C: exp(u cos(a pi/2)) cos(u sin(a pi/2)), S: same with sin, u = z^a/a.
double trig_alpha_eval(TrigKind kind, const AlphaBasis& alpha, EvalPoint z);

/// E_alpha(z1 + z2) - E_alpha(z1) E_alpha(z2) from the closed form.
double semigroup_defect(const AlphaBasis& alpha, EvalPoint z1, EvalPoint z2);

}  // namespace alphacalc
