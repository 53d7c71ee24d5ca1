#include "alphacalc/geometry.hpp"

#include <algorithm>
#include <string>

#include "alphacalc/errors.hpp"

namespace alphacalc {

namespace {

void check_dimension(std::size_t a, std::size_t b) {
  if (a != b) {
    throw InputError("dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

void check_index(std::size_t idx, std::size_t dim) {
  if (idx >= dim) throw InputError("index " + std::to_string(idx) + " out of range for dimension " + std::to_string(dim));
}

// Rewrites an exact multivariate series with nonnegative integer exponents
// as a polynomial in the coordinates.
Polynomial as_polynomial(const MultiSeries& f) {
  if (!f.is_exact()) {
    throw PreconditionError("cannot substitute a curve into a truncated connection component");
  }
  Polynomial::TermMap terms;
  const long n = f.ramification();
  for (const auto& [k, c] : f.terms()) {
    Polynomial::Exponents e(k.size());
    for (std::size_t j = 0; j < k.size(); ++j) {
      if (k[j] < 0 || k[j] % n != 0) {
        throw PreconditionError(
            "connection components must be polynomials in nonnegative integer powers of the coordinates");
      }
      e[j] = static_cast<unsigned>(k[j] / n);
    }
    terms.emplace(std::move(e), c);
  }
  return Polynomial(f.num_vars(), std::move(terms));
}

}  // namespace

ConnectionComponents::ConnectionComponents(std::size_t dimension)
    : dim_(dimension), data_(dimension * dimension * dimension, zero_function(dimension)) {}

std::size_t ConnectionComponents::slot(std::size_t i, std::size_t j, std::size_t k) const {
  check_index(i, dim_);
  check_index(j, dim_);
  check_index(k, dim_);
  return (i * dim_ + j) * dim_ + k;
}

const MultiSeries& ConnectionComponents::at(std::size_t i, std::size_t j, std::size_t k) const {
  return data_[slot(i, j, k)];
}

void ConnectionComponents::set(std::size_t i, std::size_t j, std::size_t k, MultiSeries value) {
  check_dimension(value.num_vars(), dim_);
  data_[slot(i, j, k)] = std::move(value);
}

ConnectionField::ConnectionField(std::size_t dimension)
    : dim_(dimension), data_(dimension * dimension * (dimension + 1) / 2, zero_function(dimension)) {}

std::size_t ConnectionField::slot(std::size_t i, std::size_t j, std::size_t k) const {
  check_index(i, dim_);
  check_index(j, dim_);
  check_index(k, dim_);
  if (j > k) std::swap(j, k);
  // packed upper triangle (j <= k) of each i-slice
  return i * (dim_ * (dim_ + 1) / 2) + j * dim_ - j * (j - 1) / 2 + (k - j);
}

const MultiSeries& ConnectionField::at(std::size_t i, std::size_t j, std::size_t k) const {
  return data_[slot(i, j, k)];
}

void ConnectionField::set(std::size_t i, std::size_t j, std::size_t k, MultiSeries value) {
  check_dimension(value.num_vars(), dim_);
  data_[slot(i, j, k)] = std::move(value);
}

ConnectionComponents ConnectionField::components() const {
  ConnectionComponents out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      for (std::size_t k = 0; k < dim_; ++k) out.set(i, j, k, at(i, j, k));
    }
  }
  return out;
}

TorsionComponents::TorsionComponents(std::size_t dimension)
    : dim_(dimension), data_(dimension * dimension * dimension, zero_function(dimension)) {}

const MultiSeries& TorsionComponents::at(std::size_t k, std::size_t j, std::size_t i) const {
  return data_[(k * dim_ + j) * dim_ + i];
}

MultiSeries& TorsionComponents::at(std::size_t k, std::size_t j, std::size_t i) {
  return data_[(k * dim_ + j) * dim_ + i];
}

bool TorsionComponents::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const MultiSeries& s) { return s.is_zero(); });
}

RiemannComponents::RiemannComponents(std::size_t dimension)
    : dim_(dimension), data_(dimension * dimension * dimension * dimension, zero_function(dimension)) {}

const MultiSeries& RiemannComponents::at(std::size_t l, std::size_t k, std::size_t i, std::size_t j) const {
  return data_[((l * dim_ + k) * dim_ + i) * dim_ + j];
}

MultiSeries& RiemannComponents::at(std::size_t l, std::size_t k, std::size_t i, std::size_t j) {
  return data_[((l * dim_ + k) * dim_ + i) * dim_ + j];
}

bool RiemannComponents::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const MultiSeries& s) { return s.is_zero(); });
}

MultiSeries zero_function(std::size_t dimension) { return MultiSeries::polynomial(dimension, 1, {}); }

std::vector<PuiseuxSeries> tangent(const CurveSeries& curve, const AlphaBasis& alpha) {
  std::vector<PuiseuxSeries> out;
  out.reserve(curve.dimension());
  for (const auto& x : curve.coords) out.push_back(alpha_deriv(x, alpha));
  return out;
}

VectorField commutator(const VectorField& v, const VectorField& w, const AlphaBasis& alpha) {
  const std::size_t dim = v.dimension();
  check_dimension(dim, w.dimension());
  VectorField u{std::vector<MultiSeries>(dim, zero_function(dim))};
  for (std::size_t j = 0; j < dim; ++j) {
    for (std::size_t i = 0; i < dim; ++i) {
      u.components[j] = u.components[j] + v.components[i] * alpha_partial(w.components[j], i, alpha) -
                        w.components[i] * alpha_partial(v.components[j], i, alpha);
    }
  }
  return u;
}

VectorField covariant_deriv(const VectorField& u, const VectorField& v, const ConnectionField& gamma,
                            const AlphaBasis& alpha) {
  const std::size_t dim = u.dimension();
  check_dimension(dim, v.dimension());
  check_dimension(dim, gamma.dimension());
  VectorField out{std::vector<MultiSeries>(dim, zero_function(dim))};
  for (std::size_t k = 0; k < dim; ++k) {
    MultiSeries acc = zero_function(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      acc = acc + u.components[i] * alpha_partial(v.components[k], i, alpha);
      for (std::size_t j = 0; j < dim; ++j) {
        acc = acc + u.components[i] * v.components[j] * gamma.at(k, j, i);
      }
    }
    out.components[k] = std::move(acc);
  }
  return out;
}

TorsionComponents torsion(const ConnectionComponents& gamma) {
  const std::size_t dim = gamma.dimension();
  TorsionComponents out(dim);
  for (std::size_t k = 0; k < dim; ++k) {
    for (std::size_t j = 0; j < dim; ++j) {
      for (std::size_t i = 0; i < dim; ++i) out.at(k, j, i) = gamma.at(k, i, j) - gamma.at(k, j, i);
    }
  }
  return out;
}

TorsionComponents torsion(const ConnectionField& gamma) { return torsion(gamma.components()); }

RiemannComponents riemann(const ConnectionField& gamma, const AlphaBasis& alpha) {
  const std::size_t dim = gamma.dimension();
  // partials[(l, k, j, i)] = d_i gamma^l_kj
  std::vector<MultiSeries> partials;
  partials.reserve(dim * dim * dim * dim);
  for (std::size_t l = 0; l < dim; ++l) {
    for (std::size_t k = 0; k < dim; ++k) {
      for (std::size_t j = 0; j < dim; ++j) {
        for (std::size_t i = 0; i < dim; ++i) partials.push_back(alpha_partial(gamma.at(l, k, j), i, alpha));
      }
    }
  }
  auto partial = [&](std::size_t l, std::size_t k, std::size_t j, std::size_t i) -> const MultiSeries& {
    return partials[((l * dim + k) * dim + j) * dim + i];
  };

  RiemannComponents out(dim);
  for (std::size_t l = 0; l < dim; ++l) {
    for (std::size_t k = 0; k < dim; ++k) {
      for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
          MultiSeries r = partial(l, k, j, i) - partial(l, k, i, j);
          for (std::size_t m = 0; m < dim; ++m) {
            r = r + gamma.at(m, k, j) * gamma.at(l, m, i) - gamma.at(m, k, i) * gamma.at(l, m, j);
          }
          out.at(l, k, i, j) = std::move(r);
        }
      }
    }
  }
  return out;
}

std::vector<PuiseuxSeries> autoparallel_residual(const ConnectionField& gamma, const CurveSeries& curve,
                                                 const AlphaBasis& alpha) {
  const std::size_t dim = gamma.dimension();
  check_dimension(dim, curve.dimension());
  const auto t = tangent(curve, alpha);
  std::vector<PuiseuxSeries> out;
  out.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    PuiseuxSeries r = alpha_deriv(t[i], alpha);
    for (std::size_t j = 0; j < dim; ++j) {
      for (std::size_t k = 0; k < dim; ++k) {
        const MultiSeries& g = gamma.at(i, j, k);
        if (g.is_zero() && g.is_exact()) continue;
        r = r + as_polynomial(g).eval_times(curve.coords, t[j] * t[k]);
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace alphacalc
