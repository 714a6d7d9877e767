#pragma once

#include <string>

#include "json.hpp"

#include "grafock/element.hpp"
#include "grafock/process.hpp"
#include "grafock/weights.hpp"

namespace grafock {

// Element wire format:
//   {"terms":[{"gens":[1,3],"re":0.5,"im":-1.0}, ...]}
// Generators sorted ascending within a term, term indices unique. Round-trips
// are bit-exact for finite doubles.
nlohmann::json element_to_json(const GrassmannElement& z);
GrassmannElement element_from_json(const nlohmann::json& j);

std::string element_to_string(const GrassmannElement& z);
GrassmannElement element_from_string(const std::string& text);

// {"phi":"linear","lambda":1.0,"G_max":64}
nlohmann::json weight_config_to_json(const WeightSystem& w, double lambda);
WeightSystem weight_system_from_json(const nlohmann::json& j);

// {"density":{"form":"power_law","H":0.7},"n_max":400,"U":40.0,"M":16384}
nlohmann::json model_config_to_json(const ProcessModel& model);
ProcessModel model_from_json(const nlohmann::json& j);
SpectralDensity density_from_json(const nlohmann::json& j);

nlohmann::json vage_report_to_json(const VageReport& r);

// 17 significant digits, '.' decimal point, locale-independent.
std::string format_csv_double(double v);

}  // namespace grafock
