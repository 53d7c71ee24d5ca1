#include "alphacalc/json_io.hpp"

#include <set>
#include <string>
#include <utility>

#include "alphacalc/errors.hpp"

namespace alphacalc {

namespace {

const Json& require(const Json& j, const char* key) {
  if (!j.is_object()) throw InputError(std::string("expected an object with field '") + key + "'");
  const auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string("missing field '") + key + "'");
  return *it;
}

long integer_field(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw InputError(std::string("'") + what + "' must be an integer");
  return j.get<long>();
}

std::string string_field(const Json& j, const char* what) {
  if (!j.is_string()) throw InputError(std::string("'") + what + "' must be a decimal string");
  return j.get<std::string>();
}

Rat term_coeff(const Json& t) {
  const Rat num = Rat::parse(string_field(require(t, "num"), "num"));
  const Rat den = Rat::parse(string_field(require(t, "den"), "den"));
  if (!num.is_integer() || !den.is_integer()) throw InputError("'num' and 'den' must be integers");
  if (den.is_zero()) throw InputError("zero denominator");
  return num / den;
}

void put_coeff(Json& t, const Rat& c) {
  t["num"] = c.num().get_str();
  t["den"] = c.den().get_str();
}

long positive_ramification(const Json& j) {
  const long n = integer_field(require(j, "ramification"), "ramification");
  if (n < 1) throw InputError("ramification must be >= 1");
  return n;
}

std::size_t one_based(const Json& j, const char* what, std::size_t dim) {
  const long v = integer_field(j, what);
  if (v < 1 || static_cast<std::size_t>(v) > dim) {
    throw InputError(std::string("index '") + what + "' out of range 1.." + std::to_string(dim));
  }
  return static_cast<std::size_t>(v - 1);
}

}  // namespace

Json rat_to_json(const Rat& r) { return r.str(); }

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  return Rat::parse(string_field(j, "rational"));
}

AlphaBasis alpha_from_json(const Json& j) {
  if (j.is_string()) return AlphaBasis::parse(j.get<std::string>());
  return AlphaBasis(integer_field(require(j, "m"), "m"), integer_field(require(j, "n"), "n"));
}

Json alpha_to_json(const AlphaBasis& a) { return Json{{"m", a.m()}, {"n", a.n()}}; }

Json series_to_json(const PuiseuxSeries& f) {
  Json terms = Json::array();
  for (const auto& [k, c] : f.terms()) {
    Json t{{"k", k}};
    put_coeff(t, c);
    terms.push_back(std::move(t));
  }
  return Json{{"ramification", f.ramification()}, {"truncation_k", f.truncation_index()}, {"terms", std::move(terms)}};
}

PuiseuxSeries series_from_json(const Json& j) {
  const long n = positive_ramification(j);
  const long trunc = integer_field(require(j, "truncation_k"), "truncation_k");
  const Json& terms = require(j, "terms");
  if (!terms.is_array()) throw InputError("'terms' must be an array");
  PuiseuxSeries::TermMap map;
  for (const auto& t : terms) {
    const long k = integer_field(require(t, "k"), "k");
    if (k >= trunc) throw InputError("term index " + std::to_string(k) + " is not below truncation_k");
    if (!map.emplace(k, term_coeff(t)).second) throw InputError("duplicate term index " + std::to_string(k));
  }
  return PuiseuxSeries(n, trunc, std::move(map));
}

Json real_series_to_json(const RealSeries& f) {
  Json terms = Json::array();
  for (const auto& [k, c] : f.terms()) terms.push_back(Json{{"k", k}, {"value", c}});
  return Json{{"ramification", f.ramification()}, {"truncation_k", f.truncation_index()}, {"terms", std::move(terms)}};
}

Json multi_to_json(const MultiSeries& f) {
  Json trunc = Json::array();
  for (const auto& b : f.truncation()) trunc.push_back(b ? Json(*b) : Json(nullptr));
  Json terms = Json::array();
  for (const auto& [k, c] : f.terms()) {
    Json t{{"k", k}};
    put_coeff(t, c);
    terms.push_back(std::move(t));
  }
  return Json{{"num_vars", f.num_vars()},     {"ramification", f.ramification()}, {"truncation_k", std::move(trunc)},
              {"lowest_k", f.lowest()},        {"terms", std::move(terms)}};
}

MultiSeries multi_from_json(const Json& j, std::optional<std::size_t> num_vars) {
  if (!j.is_object()) throw InputError("multivariate series must be an object");
  std::size_t vars = 0;
  if (const auto it = j.find("num_vars"); it != j.end()) {
    const long v = integer_field(*it, "num_vars");
    if (v < 1) throw InputError("num_vars must be >= 1");
    vars = static_cast<std::size_t>(v);
    if (num_vars && *num_vars != vars) throw InputError("num_vars does not match the dimension");
  } else if (num_vars) {
    vars = *num_vars;
  } else {
    throw InputError("missing field 'num_vars'");
  }
  const long n = positive_ramification(j);

  std::vector<TruncBound> trunc(vars);
  if (const auto it = j.find("truncation_k"); it != j.end() && !it->is_null()) {
    if (it->is_array()) {
      if (it->size() != vars) throw InputError("'truncation_k' must have one entry per variable");
      for (std::size_t v = 0; v < vars; ++v) {
        if (!(*it)[v].is_null()) trunc[v] = integer_field((*it)[v], "truncation_k");
      }
    } else {
      const long k = integer_field(*it, "truncation_k");
      for (auto& b : trunc) b = k;
    }
  }

  const Json& terms = require(j, "terms");
  if (!terms.is_array()) throw InputError("'terms' must be an array");
  MultiSeries::TermMap map;
  std::vector<long> lowest(vars, 0);
  for (const auto& t : terms) {
    const Json& kj = require(t, "k");
    if (!kj.is_array() || kj.size() != vars) throw InputError("term 'k' must have one index per variable");
    MultiSeries::Index k(vars);
    for (std::size_t v = 0; v < vars; ++v) {
      k[v] = integer_field(kj[v], "k");
      if (trunc[v] && k[v] >= *trunc[v]) throw InputError("term index is not below truncation_k");
      lowest[v] = std::min(lowest[v], k[v]);
    }
    if (!map.emplace(std::move(k), term_coeff(t)).second) throw InputError("duplicate term index");
  }

  if (const auto it = j.find("lowest_k"); it != j.end()) {
    if (!it->is_array() || it->size() != vars) throw InputError("'lowest_k' must have one entry per variable");
    for (std::size_t v = 0; v < vars; ++v) {
      const long lo = integer_field((*it)[v], "lowest_k");
      if (lo > lowest[v]) throw InputError("'lowest_k' exceeds a stored index");
      lowest[v] = lo;
    }
  }
  return MultiSeries(vars, n, std::move(trunc), std::move(lowest), std::move(map));
}

OdeRequest ode_request_from_json(const Json& j) {
  const AlphaBasis alpha = alpha_from_json(require(j, "alpha"));
  const Json& coeffs_j = require(j, "coeffs");
  if (!coeffs_j.is_array()) throw InputError("'coeffs' must be an array");
  std::vector<Rat> coeffs;
  for (const auto& c : coeffs_j) coeffs.push_back(rat_from_json(c));

  std::optional<PuiseuxSeries> forcing;
  if (const auto it = j.find("forcing"); it != j.end() && !it->is_null()) forcing = series_from_json(*it);

  InitialData init;
  if (const auto it = j.find("init"); it != j.end()) {
    if (!it->is_array()) throw InputError("'init' must be an array");
    for (const auto& v : *it) init.values.push_back(rat_from_json(v));
  }
  const long trunc = integer_field(require(j, "K"), "K");
  return OdeRequest{OdeSpec(std::move(coeffs), std::move(forcing), alpha), std::move(init), trunc};
}

GeometryInput geometry_from_json(const Json& j) {
  const long dim_l = integer_field(require(j, "dimension"), "dimension");
  if (dim_l < 1) throw InputError("dimension must be >= 1");
  const auto dim = static_cast<std::size_t>(dim_l);
  GeometryInput in{alpha_from_json(require(j, "alpha")), ConnectionField(dim), std::nullopt};

  std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
  if (const auto it = j.find("gamma"); it != j.end()) {
    if (!it->is_array()) throw InputError("'gamma' must be an array");
    for (const auto& entry : *it) {
      const std::size_t i = one_based(require(entry, "i"), "i", dim);
      std::size_t a = one_based(require(entry, "j"), "j", dim);
      std::size_t b = one_based(require(entry, "k"), "k", dim);
      MultiSeries value = multi_from_json(require(entry, "series"), dim);
      if (a > b) std::swap(a, b);
      if (!seen.emplace(i, a, b).second) {
        // gamma^i_jk and gamma^i_kj may both be listed only if they agree
        if (!(in.gamma.at(i, a, b) == value)) {
          throw InputError("conflicting entries for a symmetric connection component");
        }
        continue;
      }
      in.gamma.set(i, a, b, std::move(value));
    }
  }

  if (const auto it = j.find("curve"); it != j.end() && !it->is_null()) {
    if (!it->is_array() || it->size() != dim) throw InputError("'curve' must list one series per coordinate");
    CurveSeries curve;
    for (const auto& c : *it) curve.coords.push_back(series_from_json(c));
    in.curve = std::move(curve);
  }
  return in;
}

Json torsion_to_json(const TorsionComponents& t) {
  const std::size_t dim = t.dimension();
  Json comps = Json::array();
  for (std::size_t k = 0; k < dim; ++k) {
    for (std::size_t jj = 0; jj < dim; ++jj) {
      for (std::size_t i = 0; i < dim; ++i) {
        const MultiSeries& s = t.at(k, jj, i);
        if (s.is_zero()) continue;
        comps.push_back(Json{{"k", k + 1}, {"j", jj + 1}, {"i", i + 1}, {"series", multi_to_json(s)}});
      }
    }
  }
  return Json{{"dimension", dim}, {"components", std::move(comps)}};
}

Json riemann_to_json(const RiemannComponents& r) {
  const std::size_t dim = r.dimension();
  Json comps = Json::array();
  for (std::size_t l = 0; l < dim; ++l) {
    for (std::size_t k = 0; k < dim; ++k) {
      for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t jj = 0; jj < dim; ++jj) {
          const MultiSeries& s = r.at(l, k, i, jj);
          if (s.is_zero()) continue;
          comps.push_back(
              Json{{"l", l + 1}, {"k", k + 1}, {"i", i + 1}, {"j", jj + 1}, {"series", multi_to_json(s)}});
        }
      }
    }
  }
  return Json{{"dimension", dim}, {"components", std::move(comps)}};
}

}  // namespace alphacalc
