#pragma once

// Self-verification suite behind `singcount verify`: route agreement,
// engine vs. closed forms, worked-example reproduction and the known
// disagreements of two printed formulas.

#include "singcount/closed_forms.hpp"
#include "singcount/counts.hpp"
#include "singcount/targets.hpp"

#include <vector>

namespace singcount {

struct VerifyReport {
  std::vector<Check> checks;
  /// Unequal engine/printed pairs; reported, never counted as failures.
  std::vector<DiscrepancyReport> discrepancies;

  bool ok() const;
};

struct VerifyOptions {
  int max_dim = 5;
  /// Optional user table: counted through every route, A2 routes compared.
  TargetPtr table;
};

VerifyReport run_verification(const VerifyOptions& options);

/// The four P1 x P1 Chern numbers (c1^2, c1*x1, x1^2, x2) in terms of the
/// parameters d1, d2.
std::map<Monomial, Poly> p1p1_chern_numbers(const Poly& d1, const Poly& d2);

}  // namespace singcount
