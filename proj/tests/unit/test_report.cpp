#include <doctest.h>

#include "fixtures.hpp"
#include "report.hpp"

using namespace charclass;
using fixtures::cls;
using fixtures::ideal;

TEST_CASE("json layout") {
  auto r = compute_report(ideal("vars: x,y,z\nideal: x*y, x^2"), fixtures::context(7),
                          ClassRequest::all());
  auto j = report_to_json(r);
  CHECK(j["ambient_dim"] == 2);
  CHECK(j["variables"] == nlohmann::json::array({"x", "y", "z"}));
  CHECK(j["classes"]["sm_segre"]["coeffs_by_codim"] == nlohmann::json::array({0, 1, -1}));
  CHECK(j["classes"]["segre"]["coeffs_by_codim"] == nlohmann::json::array({0, 1, 0}));
  CHECK(j["euler"] == 2);
  CHECK(j["meta"]["prime"] == 32003);
  CHECK(j["meta"]["seed"] == 7);
  CHECK(j["meta"]["trials"] == 3);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j["classes"].items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"segre", "sm_segre", "csm", "fulton", "milnor_measure", "milnor"});
}

TEST_CASE("json omits unrequested classes and nulls euler") {
  ClassRequest req;
  req.sm_segre = true;
  auto r = compute_report(ideal("vars: x,y,z\nideal: x*y, x^2"), fixtures::context(), req);
  auto j = report_to_json(r);
  CHECK(j["classes"].size() == 1);
  CHECK(j["euler"].is_null());
}

TEST_CASE("huge coefficients become strings") {
  auto big = truncated_inverse(cls(3, {1, 1000000}));
  auto j = class_to_json(big);
  CHECK(j["coeffs_by_codim"][2] == 1000000000000LL);
  CHECK(j["coeffs_by_codim"][3] == -1000000000000000000LL);
  auto huge = truncated_inverse(cls(4, {1, 1000000}));
  CHECK(class_to_json(huge)["coeffs_by_codim"][4] == "1000000000000000000000000");
}

TEST_CASE("text rendering") {
  auto r = compute_report(ideal("vars: x,y,z\nideal: x*y"), fixtures::context(), ClassRequest::all());
  auto text = report_to_text(r);
  CHECK(text.find("ambient: P^2 (x, y, z)") != std::string::npos);
  CHECK(text.find("2H - 3H^2  =  2[P^1] - 3[P^0]") != std::string::npos);
  CHECK(text.find("euler           3") != std::string::npos);
}
