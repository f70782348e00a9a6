#pragma once

// Closed-form counts written out term by term, used as independent
// references for the Euler-class engine.  They are transcribed exactly,
// including the general P^m tacnode formula and the P1 x P1 tacnode
// constant, both of which disagree with the engine; comparisons report the
// disagreement instead of hiding it.

#include "singcount/poly.hpp"
#include "singcount/sing_class.hpp"

#include <map>
#include <string>

namespace singcount {

struct DiscrepancyReport {
  std::string context;
  Poly engine_value;
  Poly reference_value;
  bool equal = false;
};

/// Generic count as a polynomial in c1, x1..xm (ring Ring::chern(m)).
/// Sums whose upper index falls below 0 are empty.
Poly formula_closed(SingClass sing, int m);

/// Counts on P^m with L = O(d):
///   A1: (m+1)(d-1)^m
///   A2: m(m+1)(m+2)/2 (d-1)^{m-1}(d-2)
///   A3: m(m+1)(m+2)/12 (d-1)^{m-2}(m2 d^2 + m1 d + m0),
///       m2 = m^2+2m-1, m1 = -12m^2-28m+8, m0 = 3m^2+8m-3  (m >= 2)
Poly pm_closed(SingClass sing, int m, const Poly& d);

/// Counts on P1 x P1 with L = O(d1, d2):
///   A1: 6 d1 d2 - 4(d1+d2) + 4
///   A2: 24(d1-1)(d2-1)
///   A3: 100 d1 d2 - 128(d1+d2) + 136
Poly p1p1_closed(SingClass sing, const Poly& d1, const Poly& d2);

/// Replace each monomial of a generic formula by the supplied Chern number.
/// Throws std::out_of_range when a monomial has no entry.
Poly apply_chern_numbers(const Poly& formula, const std::map<Monomial, Poly>& numbers);

DiscrepancyReport compare(const Poly& engine, const Poly& reference, std::string context);

}  // namespace singcount
