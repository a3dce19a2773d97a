#pragma once

#include <string>

#include <json.hpp>

#include "characteristic_classes.hpp"

namespace charclass {

// {"ambient_dim", "variables", "classes": {name: {"coeffs_by_codim": [...]}},
//  "euler", "meta": {"prime", "seed", "trials"}}
// Coefficients that do not fit in 64 bits are emitted as decimal strings.
nlohmann::ordered_json report_to_json(const ClassReport& report);

// Each class in both H-power and [P^k] notation, one per line.
std::string report_to_text(const ClassReport& report);

nlohmann::ordered_json class_to_json(const ChowClass& c);

}  // namespace charclass
