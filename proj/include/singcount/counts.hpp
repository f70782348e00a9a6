#pragma once

// Counting pipelines.  Each count is the integral of a product of Euler
// classes over a slice D_k x X (or D_k x P(TX)):
//
//   A1       e(L_A0) e(V_A1)                    over D_1 x X
//   A2_det   e(L_A0) e(V_A1) e(L_A2)            over D_2 x X
//   A2_proj  e(L_A0) e(V_A1) e(V_PA2)           over D_2 x P(TX)
//   A3       e(L_A0) e(V_A1) e(V_PA2) e(L_PA3)  over D_3 x P(TX)

#include "singcount/closed_forms.hpp"
#include "singcount/cohomology.hpp"
#include "singcount/poly.hpp"
#include "singcount/sing_class.hpp"
#include "singcount/targets.hpp"

#include <optional>
#include <string>
#include <vector>

namespace singcount {

enum class Route { A1, A2_det, A2_proj, A3 };

std::string to_string(Route r);
SingClass sing_class_of(Route r);
Route default_route(SingClass s);

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct CountResult {
  Poly value;
  Route route = Route::A1;
  std::vector<Check> checks;
  std::vector<std::string> notes;
  std::vector<DiscrepancyReport> discrepancies;
};

Ambient ambient_for(Route route, int m);
std::vector<Poly> euler_factors(Route route, int m);

/// Product of the route's Euler classes after the homogeneity assertion
/// (each factor homogeneous, total weight equal to the ambient dimension).
Poly integrand(Route route, int m);

CountResult run_route(Route route, const ChernTarget& target);

CountResult count_A1(const ChernTarget& target);
CountResult count_A2_det(const ChernTarget& target);
CountResult count_A2_proj(const ChernTarget& target);
CountResult count_A3(const ChernTarget& target);

struct CountOptions {
  /// Only meaningful for A2; defaults to the determinant route.
  std::optional<Route> route;
  /// For A2, also run the other route and record the agreement check.
  bool cross_check_routes = false;
  /// Compare against the closed forms when the target is P^m or P1 x P1.
  bool compare_references = true;
};

CountResult count(SingClass sing, const ChernTarget& target, const CountOptions& options = {});

/// Count on the generic target of dimension m: a polynomial in c1, x1..xm.
Poly formula(SingClass sing, int m, std::optional<Route> route = std::nullopt);

}  // namespace singcount
