#include "singcount/counts.hpp"

#include "singcount/bundles.hpp"

#include <stdexcept>

namespace singcount {

std::string to_string(Route r) {
  switch (r) {
    case Route::A1: return "A1";
    case Route::A2_det: return "A2_det";
    case Route::A2_proj: return "A2_proj";
    case Route::A3: return "A3";
  }
  return "?";
}

SingClass sing_class_of(Route r) {
  switch (r) {
    case Route::A1: return SingClass::A1;
    case Route::A2_det:
    case Route::A2_proj: return SingClass::A2;
    case Route::A3: return SingClass::A3;
  }
  throw std::logic_error("unknown route");
}

Route default_route(SingClass s) {
  switch (s) {
    case SingClass::A1: return Route::A1;
    case SingClass::A2: return Route::A2_det;
    case SingClass::A3: return Route::A3;
  }
  throw std::logic_error("unknown singularity class");
}

Ambient ambient_for(Route route, int m) {
  switch (route) {
    case Route::A1: return {m, 1, false};
    case Route::A2_det: return {m, 2, false};
    case Route::A2_proj: return {m, 2, true};
    case Route::A3: return {m, 3, true};
  }
  throw std::logic_error("unknown route");
}

std::vector<Poly> euler_factors(Route route, int m) {
  switch (route) {
    case Route::A1: return {euler_LA0(m), euler_VA1(m)};
    case Route::A2_det: return {euler_LA0(m), euler_VA1(m), euler_LA2(m)};
    case Route::A2_proj: return {euler_LA0(m), euler_VA1(m), euler_VPA2(m)};
    case Route::A3: return {euler_LA0(m), euler_VA1(m), euler_VPA2(m), euler_LPA3(m)};
  }
  throw std::logic_error("unknown route");
}

Poly integrand(Route route, int m) {
  const Ambient amb = ambient_for(route, m);
  const auto factors = euler_factors(route, m);
  int total = 0;
  for (const auto& f : factors) {
    auto w = f.homogeneous_weight();
    if (!w) throw WeightError("Euler class factor of route " + to_string(route) + " is not homogeneous");
    total += *w;
  }
  if (total != amb.dimension())
    throw WeightError("integrand of route " + to_string(route) + " has weight " + std::to_string(total) +
                      " but the ambient has dimension " + std::to_string(amb.dimension()));
  Poly p = product(factors, amb);
  if (!p.is_homogeneous()) throw WeightError("reduced integrand of route " + to_string(route) + " is not homogeneous");
  return p;
}

CountResult run_route(Route route, const ChernTarget& target) {
  const int m = target.dimension();
  CountResult result;
  result.route = route;
  Poly p = integrand(route, m);
  const Ambient amb = ambient_for(route, m);
  result.checks.push_back({"homogeneity", true,
                           "integrand weight " + std::to_string(amb.dimension()) + " = dim of " +
                               (amb.projectivized ? "D_k x P(TX)" : "D_k x X")});
  result.value = integrate(p, amb, target);
  return result;
}

CountResult count_A1(const ChernTarget& target) { return run_route(Route::A1, target); }
CountResult count_A2_det(const ChernTarget& target) { return run_route(Route::A2_det, target); }
CountResult count_A2_proj(const ChernTarget& target) { return run_route(Route::A2_proj, target); }
CountResult count_A3(const ChernTarget& target) { return run_route(Route::A3, target); }

namespace {

void compare_with_references(SingClass sing, const ChernTarget& target, CountResult& result) {
  std::optional<DiscrepancyReport> report;
  const auto factors = target.factors();
  if (target.kind() == ChernTarget::Kind::projective_space) {
    const int m = target.dimension();
    if (sing == SingClass::A3 && m < 2) return;
    report = compare(result.value, pm_closed(sing, m, factors.front().degree),
                     "P^" + std::to_string(m) + " closed form for " + to_string(sing));
  } else if (target.kind() == ChernTarget::Kind::product_of_projective_spaces && factors.size() == 2 &&
             factors[0].dim == 1 && factors[1].dim == 1) {
    report = compare(result.value, p1p1_closed(sing, factors[0].degree, factors[1].degree),
                     "P1 x P1 closed form for " + to_string(sing));
  }
  if (!report) return;
  if (report->equal) {
    result.checks.push_back({"reference:" + report->context, true, "engine matches the closed form"});
  } else {
    result.notes.push_back(report->context + ": engine gives " + report->engine_value.to_string() +
                           ", closed form gives " + report->reference_value.to_string());
    result.discrepancies.push_back(std::move(*report));
  }
}

}  // namespace

CountResult count(SingClass sing, const ChernTarget& target, const CountOptions& options) {
  Route route = default_route(sing);
  if (options.route) {
    if (sing_class_of(*options.route) != sing)
      throw std::invalid_argument("route " + to_string(*options.route) + " does not count " + to_string(sing));
    route = *options.route;
  }
  CountResult result = run_route(route, target);
  if (sing == SingClass::A2 && options.cross_check_routes) {
    Route other = route == Route::A2_det ? Route::A2_proj : Route::A2_det;
    CountResult alt = run_route(other, target);
    bool same = alt.value == result.value;
    result.checks.push_back({"route_agreement", same,
                             same ? "A2_det and A2_proj agree"
                                  : to_string(other) + " gives " + alt.value.to_string()});
  }
  if (options.compare_references) compare_with_references(sing, target, result);
  return result;
}

Poly formula(SingClass sing, int m, std::optional<Route> route) {
  auto generic = make_generic(m);
  return count(sing, *generic, {route, false, false}).value;
}

}  // namespace singcount
