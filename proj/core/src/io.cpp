#include "schlicht/io.hpp"

namespace schlicht::io {

json to_json(const TruncatedSeries& s) {
  json coeffs = json::array();
  for (const auto& c : s.coefficients()) coeffs.push_back({c.real(), c.imag()});
  return json{{"order", s.order()}, {"coeffs", std::move(coeffs)}};
}

TruncatedSeries series_from_json(const json& j) {
  try {
    const int order = j.at("order").get<int>();
    const auto& coeffs = j.at("coeffs");
    if (order < 0 || !coeffs.is_array() || coeffs.size() != static_cast<std::size_t>(order) + 1) {
      throw Error(ErrorKind::ParseError, "coeffs must hold order + 1 entries");
    }
    std::vector<complex> c;
    c.reserve(coeffs.size());
    for (const auto& pair : coeffs) {
      if (!pair.is_array() || pair.size() != 2) throw Error(ErrorKind::ParseError, "coefficient must be [re, im]");
      c.emplace_back(pair[0].get<double>(), pair[1].get<double>());
    }
    return TruncatedSeries(std::move(c));
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

json to_json(const HerglotzMeasure& m) {
  json atoms = json::array();
  for (const auto& a : m.atoms()) atoms.push_back({a.angle, a.weight});
  return json{{"atoms", std::move(atoms)}};
}

HerglotzMeasure measure_from_json(const json& j) {
  try {
    std::vector<HerglotzMeasure::Atom> atoms;
    for (const auto& pair : j.at("atoms")) {
      if (!pair.is_array() || pair.size() != 2) throw Error(ErrorKind::ParseError, "atom must be [t, mu]");
      atoms.push_back({pair[0].get<double>(), pair[1].get<double>()});
    }
    return HerglotzMeasure(std::move(atoms));
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

json to_json(const FunctionalReport& r) {
  json j{{"value", r.value}};
  j["bound"] = r.bound ? json(*r.bound) : json(nullptr);
  j["margin"] = r.margin ? json(*r.margin) : json(nullptr);
  j["name"] = r.name;
  if (!r.per_index.empty()) j["per_index"] = r.per_index;
  return j;
}

json to_json(const CoefficientBoundReport& r) {
  return json{{"check", "coefficient_bound"},
              {"worst_margin", r.worst_margin},
              {"worst_index", r.worst_index},
              {"violations", r.violations},
              {"margins", r.margins}};
}

json to_json(const PommerenkeReport& r) {
  return json{{"check", "pommerenke"},
              {"value", r.value},
              {"bound", r.bound},
              {"margin", r.margin},
              {"violated", r.violated}};
}

json to_json(const SchwarzReport& r) {
  return json{{"check", "schwarz"},
              {"max_modulus_excess", r.max_modulus_excess},
              {"max_derivative_excess", r.max_derivative_excess},
              {"ok", r.ok()}};
}

json to_json(const RadiusResult& r) {
  json trace = json::array();
  for (const auto& [radius, ok] : r.trace) trace.push_back({radius, ok});
  return json{{"predicate", r.predicate_name},
              {"status", std::string(status_name(r.status))},
              {"lo", r.lo},
              {"hi", r.hi},
              {"iterations", r.iterations},
              {"trace", std::move(trace)}};
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

}  // namespace schlicht::io
