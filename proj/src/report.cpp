#include "singcount/report.hpp"

namespace singcount {

using nlohmann::json;

json poly_to_json(const Poly& p) {
  json terms = json::array();
  for (const auto& [mono, coeff] : p.ordered_terms())
    terms.push_back({{"coeff", coeff.get_str()}, {"monomial", mono.to_string()}});
  return {{"text", p.to_string()}, {"terms", std::move(terms)}};
}

Poly poly_from_json(const json& j, const RingPtr& ring) {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
    throw ParseError("polynomial JSON needs a 'terms' array");
  Poly::Terms terms;
  for (const auto& t : j["terms"]) {
    if (!t.contains("coeff") || !t["coeff"].is_string() || !t.contains("monomial") || !t["monomial"].is_string())
      throw ParseError("polynomial term needs string 'coeff' and 'monomial'");
    Integer c;
    if (c.set_str(t["coeff"].get<std::string>(), 10) != 0)
      throw ParseError("bad coefficient '" + t["coeff"].get<std::string>() + "'");
    Monomial mono = parse_monomial(t["monomial"].get<std::string>());
    if (!terms.emplace(mono, c).second) throw ParseError("repeated monomial " + mono.to_string());
  }
  return Poly::from_terms(ring, std::move(terms));
}

json check_to_json(const Check& c) {
  json j = {{"name", c.name}, {"passed", c.passed}};
  if (!c.detail.empty()) j["detail"] = c.detail;
  return j;
}

json discrepancy_to_json(const DiscrepancyReport& r) {
  return {{"context", r.context},
          {"engine_value", poly_to_json(r.engine_value)},
          {"reference_value", poly_to_json(r.reference_value)},
          {"equal", r.equal}};
}

json count_to_json(SingClass sing, const std::string& target, int dimension, const CountResult& result) {
  json checks = json::array();
  for (const auto& c : result.checks) checks.push_back(check_to_json(c));
  json discrepancies = json::array();
  for (const auto& d : result.discrepancies) discrepancies.push_back(discrepancy_to_json(d));
  return {{"singularity", to_string(sing)},
          {"target", target},
          {"dimension", dimension},
          {"route", to_string(result.route)},
          {"value", poly_to_json(result.value)},
          {"checks", std::move(checks)},
          {"discrepancies", std::move(discrepancies)}};
}

}  // namespace singcount
