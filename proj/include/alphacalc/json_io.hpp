#pragma once

#include <optional>

#include <json.hpp>

#include "alphacalc/geometry.hpp"
#include "alphacalc/multi_series.hpp"
#include "alphacalc/ode.hpp"
#include "alphacalc/series.hpp"

// JSON encodings. Rationals are always "p/q" or "p" decimal strings.
//
// series:  {"ramification": n, "truncation_k": K,
//           "terms": [{"k": <int>, "num": "<int>", "den": "<int>"}, ...]}
// multi:   {"num_vars": N, "ramification": n, "truncation_k": [K_1|null, ...],
//           "lowest_k": [k0_1, ...], "terms": [{"k": [k_1, ...], "num", "den"}, ...]}
// Ingestion throws InputError on any schema violation.

namespace alphacalc {

using Json = nlohmann::ordered_json;

Json series_to_json(const PuiseuxSeries& f);
PuiseuxSeries series_from_json(const Json& j);

/// Like series_to_json with a double "value" per term in place of num/den.
Json real_series_to_json(const RealSeries& f);

Json multi_to_json(const MultiSeries& f);
/// `num_vars` supplies the variable count when the document omits it.
MultiSeries multi_from_json(const Json& j, std::optional<std::size_t> num_vars = std::nullopt);

Json rat_to_json(const Rat& r);
Rat rat_from_json(const Json& j);
AlphaBasis alpha_from_json(const Json& j);
Json alpha_to_json(const AlphaBasis& a);

/// {"alpha": {"m":1,"n":2}, "coeffs": ["1","0","1/4"], "forcing": <series>|null,
///  "init": ["1","0"], "K": 60}
struct OdeRequest {
  OdeSpec spec;
  InitialData init;
  long truncation_index;
};
OdeRequest ode_request_from_json(const Json& j);

/// {"dimension": N, "alpha": {...}, "gamma": [{"i","j","k","series"}, ...],
///  "curve": [<series>, ...]}  -- indices are 1-based, curve is optional.
struct GeometryInput {
  AlphaBasis alpha;
  ConnectionField gamma;
  std::optional<CurveSeries> curve;
};
GeometryInput geometry_from_json(const Json& j);

Json torsion_to_json(const TorsionComponents& t);
Json riemann_to_json(const RiemannComponents& r);

}  // namespace alphacalc
