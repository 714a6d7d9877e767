#include "grafock/serialization.hpp"

#include <cstdio>

#include "grafock/errors.hpp"

namespace grafock {

using nlohmann::json;

json element_to_json(const GrassmannElement& z) {
  json terms = json::array();
  for (const auto& t : z.terms()) {
    json gens = json::array();
    for (int g : MultiIndex::from_bits(t.bits).generators()) gens.push_back(g);
    terms.push_back({{"gens", std::move(gens)},
                     {"re", t.coeff.real()},
                     {"im", t.coeff.imag()}});
  }
  return json{{"terms", std::move(terms)}};
}

GrassmannElement element_from_json(const json& j) {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
    throw ParseError("element JSON must be {\"terms\": [...]}");
  std::vector<GrassmannElement::Term> terms;
  std::vector<std::uint64_t> seen;
  for (const auto& item : j["terms"]) {
    if (!item.is_object() || !item.contains("gens"))
      throw ParseError("each term needs a \"gens\" array");
    std::vector<int> gens;
    int prev = 0;
    for (const auto& g : item["gens"]) {
      const int id = g.get<int>();
      if (id <= prev)
        throw ParseError("generator ids must be strictly ascending within a term");
      prev = id;
      gens.push_back(id);
    }
    const MultiIndex idx = MultiIndex::of(gens);
    if (std::find(seen.begin(), seen.end(), idx.bits()) != seen.end())
      throw ParseError("duplicate index entry in element JSON");
    seen.push_back(idx.bits());
    terms.push_back({idx.bits(), Complex(item.value("re", 0.0), item.value("im", 0.0))});
  }
  return GrassmannElement::from_contributions(std::move(terms));
}

std::string element_to_string(const GrassmannElement& z) {
  return element_to_json(z).dump();
}

GrassmannElement element_from_string(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad element JSON: ") + e.what());
  }
  return element_from_json(j);
}

json weight_config_to_json(const WeightSystem& w, double lambda) {
  return json{{"phi", "linear"}, {"lambda", lambda}, {"G_max", w.g_max()}};
}

WeightSystem weight_system_from_json(const json& j) {
  const std::string phi = j.value("phi", "linear");
  if (phi != "linear")
    throw ParseError("only the linear weight family is configurable: phi=\"linear\"");
  const double lambda = j.value("lambda", 1.0);
  const int g_max = j.value("G_max", 64);
  return WeightSystem::linear(lambda, g_max);
}

SpectralDensity density_from_json(const json& j) {
  const std::string form = j.value("form", "constant");
  if (form == "constant") return SpectralDensity::constant();
  if (form == "power_law") {
    if (!j.contains("H")) throw ParseError("power_law density needs \"H\"");
    return SpectralDensity::power_law(j["H"].get<double>());
  }
  if (form == "tabulated") {
    GrowthParams growth{j.value("K", 1.0), j.value("b", 0.0), j.value("N", 0)};
    return SpectralDensity::tabulated(j.at("u").get<std::vector<double>>(),
                                      j.at("m").get<std::vector<double>>(), growth);
  }
  throw ParseError("unknown density form: " + form);
}

json model_config_to_json(const ProcessModel& model) {
  json density;
  switch (model.density().form()) {
    case SpectralDensity::Form::constant:
      density = {{"form", "constant"}};
      break;
    case SpectralDensity::Form::power_law:
      density = {{"form", "power_law"}, {"H", model.density().hurst()}};
      break;
    case SpectralDensity::Form::tabulated:
      density = {{"form", "tabulated"}};
      break;
  }
  return json{{"density", std::move(density)},
              {"n_max", model.n_max()},
              {"U", model.quadrature().half_width},
              {"M", model.quadrature().node_budget},
              {"t_max", model.t_max()}};
}

ProcessModel model_from_json(const json& j) {
  if (!j.contains("density")) throw ParseError("model config needs \"density\"");
  QuadratureSpec quad;
  quad.half_width = j.value("U", 40.0);
  quad.node_budget = j.value("M", 16384);
  return ProcessModel(density_from_json(j["density"]), j.value("n_max", 400), quad,
                      j.value("t_max", 4.0));
}

json vage_report_to_json(const VageReport& r) {
  return json{{"lhs", r.lhs}, {"rhs", r.rhs}, {"constant", r.constant},
              {"holds", r.holds}};
}

std::string format_csv_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace grafock
