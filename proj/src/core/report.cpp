#include "report.hpp"

#include <iomanip>
#include <sstream>

namespace charclass {

namespace {

nlohmann::ordered_json integer_to_json(const mpz_class& v) {
  if (mpz_fits_slong_p(v.get_mpz_t())) return static_cast<std::int64_t>(v.get_si());
  return v.get_str();
}

struct Named {
  const char* json_name;
  const char* label;
  const std::optional<ChowClass>* value;
};

std::vector<Named> named_classes(const ClassReport& r) {
  return {{"segre", "segre", &r.segre},
          {"sm_segre", "sm-segre", &r.sm_segre},
          {"csm", "csm", &r.csm},
          {"fulton", "fulton", &r.fulton},
          {"milnor_measure", "milnor-measure", &r.milnor_measure},
          {"milnor", "milnor", &r.milnor}};
}

}  // namespace

nlohmann::ordered_json class_to_json(const ChowClass& c) {
  nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
  for (const auto& v : c.coeffs()) coeffs.push_back(integer_to_json(v));
  return {{"coeffs_by_codim", coeffs}};
}

nlohmann::ordered_json report_to_json(const ClassReport& report) {
  nlohmann::ordered_json j;
  j["ambient_dim"] = report.ambient_dim;
  j["variables"] = report.variables;
  nlohmann::ordered_json classes = nlohmann::ordered_json::object();
  for (const Named& c : named_classes(report))
    if (*c.value) classes[c.json_name] = class_to_json(**c.value);
  j["classes"] = classes;
  j["euler"] = report.euler ? integer_to_json(*report.euler) : nlohmann::ordered_json(nullptr);
  j["meta"] = {{"prime", report.prime}, {"seed", report.seed}, {"trials", report.trials}};
  return j;
}

std::string report_to_text(const ClassReport& report) {
  std::ostringstream out;
  out << "ambient: P^" << report.ambient_dim << " (";
  for (std::size_t i = 0; i < report.variables.size(); ++i)
    out << (i ? ", " : "") << report.variables[i];
  out << ")\n";
  for (const Named& c : named_classes(report)) {
    if (!*c.value) continue;
    out << std::left << std::setw(16) << c.label << (*c.value)->to_h_string() << "  =  "
        << (*c.value)->to_cycle_string() << '\n';
  }
  if (report.euler) out << std::left << std::setw(16) << "euler" << report.euler->get_str() << '\n';
  out << "prime " << report.prime << ", seed " << report.seed << ", trials " << report.trials
      << '\n';
  return out.str();
}

}  // namespace charclass
