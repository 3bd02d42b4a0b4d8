#pragma once

#include <json.hpp>

#include "modform/puiseux.hpp"

namespace modform {

/// { "ramification": m, "terms": [ { "exp": "j/m", "coeff": "p/q" }, ... ],
///   "truncation": "T/m" } — exponents and coefficients as reduced fraction
/// strings, never floats.
nlohmann::json series_to_json(const PuiseuxSeries& s);
PuiseuxSeries series_from_json(const nlohmann::json& j);

}  // namespace modform
