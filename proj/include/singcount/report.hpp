#pragma once

// JSON encoding of polynomials, count results and verification reports.
// Coefficients are written as decimal strings so they survive any size.

#include "singcount/closed_forms.hpp"
#include "singcount/counts.hpp"

#include <json.hpp>

#include <string>

namespace singcount {

/// {"text": "12*d^2 - 36*d + 24", "terms": [{"coeff": "12", "monomial": "d^2"}, ...]}
nlohmann::json poly_to_json(const Poly& p);

/// Inverse of poly_to_json; generators must belong to `ring`.
Poly poly_from_json(const nlohmann::json& j, const RingPtr& ring);

nlohmann::json check_to_json(const Check& c);
nlohmann::json discrepancy_to_json(const DiscrepancyReport& r);

nlohmann::json count_to_json(SingClass sing, const std::string& target, int dimension, const CountResult& result);

}  // namespace singcount
