#pragma once

// Reduction and integration on D_k x X and D_k x P(TX).
//
// Generators: H = c1 of the dual tautological bundle on the slice D_k = P^k
// (H^{k+1} = 0), lambda = c1 of the dual tautological bundle on P(TX),
// c1 = c1(L) and x_i = c_i(T*X).  Classes pulled back from X vanish above
// weight m.

#include "singcount/poly.hpp"

#include <span>
#include <stdexcept>

namespace singcount {

class ChernTarget;

class WeightError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Ambient {
  int m = 1;       // complex dimension of X
  int k = 0;       // slice dimension, D_k = P^k
  bool projectivized = false;

  Ambient(int m_, int k_, bool projectivized_);

  /// k + m, or k + 2m - 1 over P(TX).
  int dimension() const { return projectivized ? k + 2 * m - 1 : k + m; }
  RingPtr ring() const { return Ring::ambient(m, projectivized); }

  friend bool operator==(const Ambient&, const Ambient&) = default;
};

/// Weight of a monomial in c1, x1..xm only (H and lambda excluded).
int base_weight(const Monomial& mono, const Ring& ring);

/// Drop every monomial with H-exponent > k or base weight > m.
Poly truncate(const Poly& p, const Ambient& amb);

/// Canonical representative: H-exponent <= k, lambda-exponent <= m-1 (via
/// lambda^m = x1 lambda^{m-1} - x2 lambda^{m-2} + ... + (-1)^{m+1} x_m),
/// base weight <= m.
Poly reduce(const Poly& p, const Ambient& amb);

/// Product of the factors with eager truncation and reduction after every
/// step.
Poly product(std::span<const Poly> factors, const Ambient& amb);

/// Integration over the P^{m-1} fibres of P(TX) -> X: the lambda^{m-1}
/// coefficient of the reduced class.
Poly pushforward_fiber(const Poly& p, const Ambient& amb);

/// <p, [D_k x X]> or <p, [D_k x P(TX)]>, with Chern numbers supplied by
/// the target.  Any surviving monomial whose base weight is not exactly m
/// raises WeightError.
Poly integrate(const Poly& p, const Ambient& amb, const ChernTarget& target);

}  // namespace singcount
