#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "schlicht/caratheodory.hpp"
#include "schlicht/functionals.hpp"
#include "schlicht/geometry.hpp"
#include "schlicht/series.hpp"

namespace schlicht::io {

using json = nlohmann::ordered_json;

/// {"order": N, "coeffs": [[re, im], ...]} with N + 1 pairs.
json to_json(const TruncatedSeries& s);
/// Throws ParseError on a malformed document or a length/order mismatch.
TruncatedSeries series_from_json(const json& j);

/// {"atoms": [[t, mu], ...]}
json to_json(const HerglotzMeasure& m);
HerglotzMeasure measure_from_json(const json& j);

json to_json(const FunctionalReport& r);
json to_json(const CoefficientBoundReport& r);
json to_json(const PommerenkeReport& r);
json to_json(const SchwarzReport& r);
json to_json(const RadiusResult& r);

/// Parses text, wrapping parser failures as ParseError.
json parse(const std::string& text);

}  // namespace schlicht::io
