#include "singcount/cohomology.hpp"

#include "singcount/targets.hpp"

#include <vector>

namespace singcount {

namespace {

constexpr std::string_view kH = "H";
constexpr std::string_view kLambda = "lambda";

// Rewrite lambda^e, e >= m, down to lambda-degree < m.  Entry e of the
// returned table is the reduced, truncated form of lambda^e.
std::vector<Poly> lambda_powers(int max_exponent, const Ambient& amb, const RingPtr& ring) {
  const int m = amb.m;
  std::vector<Poly> table;
  table.reserve(static_cast<std::size_t>(max_exponent) + 1);
  for (int e = 0; e <= max_exponent && e < m; ++e) table.push_back(Poly::generator(ring, kLambda, e));
  if (max_exponent < m) return table;

  // lambda^m = sum_{i=1..m} (-1)^{i+1} x_i lambda^{m-i}
  Poly relation = Poly::constant(0, ring);
  for (int i = 1; i <= m; ++i) {
    Poly x = Poly::generator(ring, "x" + std::to_string(i));
    Poly term = x * Poly::generator(ring, kLambda, m - i);
    relation += (i % 2 == 1) ? term : -term;
  }
  table.push_back(truncate(relation, amb));
  Poly lambda = Poly::generator(ring, kLambda);
  for (int e = m + 1; e <= max_exponent; ++e) {
    // lambda^e = lambda * lambda^{e-1}; only the top lambda^m piece needs rewriting.
    const Poly& prev = table.back();
    Poly shifted = coefficient_of(prev, kLambda, m - 1) * table[static_cast<std::size_t>(m)];
    Poly lower = Poly::constant(0, ring);
    for (const auto& [mono, c] : prev.terms()) {
      if (mono.exponent(kLambda) == m - 1) continue;
      Poly::Terms t;
      t.emplace(mono, c);
      lower += Poly::from_terms(ring, std::move(t)) * lambda;
    }
    table.push_back(truncate(shifted + lower, amb));
  }
  return table;
}

}  // namespace

Ambient::Ambient(int m_, int k_, bool projectivized_) : m(m_), k(k_), projectivized(projectivized_) {
  if (m < 1) throw std::invalid_argument("ambient dimension m must be >= 1");
  if (k < 0) throw std::invalid_argument("slice dimension k must be >= 0");
}

int base_weight(const Monomial& mono, const Ring& ring) {
  int w = 0;
  for (const auto& [name, e] : mono.factors()) {
    if (name == kH || name == kLambda) continue;
    w += ring.weight_of(name) * e;
  }
  return w;
}

Poly truncate(const Poly& p, const Ambient& amb) {
  Poly::Terms kept;
  for (const auto& [mono, c] : p.terms()) {
    if (mono.exponent(kH) > amb.k) continue;
    if (base_weight(mono, *p.ring()) > amb.m) continue;
    kept.emplace(mono, c);
  }
  return Poly::from_terms(p.ring(), std::move(kept));
}

Poly reduce(const Poly& p, const Ambient& amb) {
  const RingPtr ring = merge_rings(p.ring(), amb.ring());
  const bool has_lambda = p.uses(kLambda);
  if (has_lambda && !amb.projectivized)
    throw ContextMismatch("lambda appears in a class on a non-projectivized ambient");
  Poly trimmed = truncate(p.in_ring(ring), amb);
  if (!has_lambda) return trimmed;

  int max_e = 0;
  for (const auto& [mono, c] : trimmed.terms()) max_e = std::max(max_e, mono.exponent(kLambda));
  if (max_e < amb.m) return trimmed;

  const auto powers = lambda_powers(max_e, amb, ring);
  Poly out = Poly::constant(0, ring);
  for (const auto& [mono, c] : trimmed.terms()) {
    int e = mono.exponent(kLambda);
    Poly::Terms t;
    if (e < amb.m) {
      t.emplace(mono, c);
      out += Poly::from_terms(ring, std::move(t));
    } else {
      t.emplace(mono.without(kLambda), c);
      out += Poly::from_terms(ring, std::move(t)) * powers[static_cast<std::size_t>(e)];
    }
  }
  return truncate(out, amb);
}

Poly product(std::span<const Poly> factors, const Ambient& amb) {
  Poly acc = Poly::constant(1, amb.ring());
  for (const auto& f : factors) acc = reduce(acc * f, amb);
  return acc;
}

Poly pushforward_fiber(const Poly& p, const Ambient& amb) {
  if (!amb.projectivized) throw std::invalid_argument("fibre integration needs a projectivized ambient");
  return coefficient_of(reduce(p, amb), kLambda, amb.m - 1);
}

Poly integrate(const Poly& p, const Ambient& amb, const ChernTarget& target) {
  if (target.dimension() != amb.m)
    throw WeightError("target dimension " + std::to_string(target.dimension()) +
                      " does not match ambient dimension " + std::to_string(amb.m));
  Poly cls = coefficient_of(reduce(p, amb), kH, amb.k);
  if (amb.projectivized) cls = coefficient_of(cls, kLambda, amb.m - 1);

  Poly total = Poly::constant(0, target.value_ring());
  for (const auto& [mono, c] : cls.terms()) {
    if (mono.exponent(kLambda) > 0)
      throw WeightError("monomial " + mono.to_string() + " still carries lambda after fibre integration");
    int w = base_weight(mono, *cls.ring());
    if (w != amb.m)
      throw WeightError("surviving monomial " + mono.to_string() + " has weight " + std::to_string(w) +
                        ", expected " + std::to_string(amb.m));
    total += Poly::constant(c, target.value_ring()) * target.eval_monomial(mono);
  }
  return total;
}

}  // namespace singcount
