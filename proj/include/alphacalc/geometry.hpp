#pragma once

#include <cstddef>
#include <vector>

#include "alphacalc/calculus.hpp"
#include "alphacalc/multi_series.hpp"
#include "alphacalc/series.hpp"

// Alpha-differential geometry in a coordinate chart x^1..x^N. Indices are
// 0-based throughout the C++ API. Every derivative of a component function is
// an alpha-partial; coordinate basis vectors commute.

namespace alphacalc {

struct VectorField {
  std::vector<MultiSeries> components;

  std::size_t dimension() const { return components.size(); }
};

/// Curve x^i(lambda) as Puiseux series in the parameter.
struct CurveSeries {
  std::vector<PuiseuxSeries> coords;

  std::size_t dimension() const { return coords.size(); }
};

/// Unconstrained component array gamma^i_jk, stored densely. Used directly
/// only where the symmetry of a connection must not be assumed.
class ConnectionComponents {
 public:
  explicit ConnectionComponents(std::size_t dimension);

  std::size_t dimension() const { return dim_; }
  const MultiSeries& at(std::size_t i, std::size_t j, std::size_t k) const;
  void set(std::size_t i, std::size_t j, std::size_t k, MultiSeries value);

 private:
  std::size_t slot(std::size_t i, std::size_t j, std::size_t k) const;

  std::size_t dim_;
  std::vector<MultiSeries> data_;
};

/// Alpha-affine connection gamma^i_jk = gamma^i_kj; only j <= k is stored,
/// so symmetry holds by construction.
class ConnectionField {
 public:
  explicit ConnectionField(std::size_t dimension);

  std::size_t dimension() const { return dim_; }
  const MultiSeries& at(std::size_t i, std::size_t j, std::size_t k) const;
  /// Sets gamma^i_jk and gamma^i_kj.
  void set(std::size_t i, std::size_t j, std::size_t k, MultiSeries value);

  ConnectionComponents components() const;

 private:
  std::size_t slot(std::size_t i, std::size_t j, std::size_t k) const;

  std::size_t dim_;
  std::vector<MultiSeries> data_;
};

/// Rank-3 component array T^k_ji, indexed at(k, j, i).
class TorsionComponents {
 public:
  explicit TorsionComponents(std::size_t dimension);

  std::size_t dimension() const { return dim_; }
  const MultiSeries& at(std::size_t k, std::size_t j, std::size_t i) const;
  MultiSeries& at(std::size_t k, std::size_t j, std::size_t i);
  bool is_zero() const;

 private:
  std::size_t dim_;
  std::vector<MultiSeries> data_;
};

/// R^l_kij, indexed at(l, k, i, j).
class RiemannComponents {
 public:
  explicit RiemannComponents(std::size_t dimension);

  std::size_t dimension() const { return dim_; }
  const MultiSeries& at(std::size_t l, std::size_t k, std::size_t i, std::size_t j) const;
  MultiSeries& at(std::size_t l, std::size_t k, std::size_t i, std::size_t j);
  bool is_zero() const;

 private:
  std::size_t dim_;
  std::vector<MultiSeries> data_;
};

/// Zero function of `dimension` coordinates.
MultiSeries zero_function(std::size_t dimension);

/// Component-wise alpha-derivative of the curve in its parameter.
std::vector<PuiseuxSeries> tangent(const CurveSeries& curve, const AlphaBasis& alpha);

/// U^j = sum_i (V^i d_i W^j - W^i d_i V^j).
VectorField commutator(const VectorField& v, const VectorField& w, const AlphaBasis& alpha);

/// (nabla_U V)^k = sum_i U^i d_i V^k + sum_{i,j} U^i V^j gamma^k_ji.
VectorField covariant_deriv(const VectorField& u, const VectorField& v, const ConnectionField& gamma,
                            const AlphaBasis& alpha);

/// T^k_ji = gamma^k_ij - gamma^k_ji.
TorsionComponents torsion(const ConnectionComponents& gamma);
TorsionComponents torsion(const ConnectionField& gamma);

/// R^l_kij = d_i gamma^l_kj - d_j gamma^l_ki
///         + sum_m (gamma^m_kj gamma^l_mi - gamma^m_ki gamma^l_mj).
RiemannComponents riemann(const ConnectionField& gamma, const AlphaBasis& alpha);

/// Residuals of the autoparallel equations
///   d_alpha t^i + sum_{j,k} gamma^i_jk(x(lambda)) t^j t^k,  t = tangent(curve).
/// The connection components must be exact polynomials in nonnegative integer
/// powers of the coordinates; anything else raises PreconditionError.
std::vector<PuiseuxSeries> autoparallel_residual(const ConnectionField& gamma, const CurveSeries& curve,
                                                 const AlphaBasis& alpha);

}  // namespace alphacalc
