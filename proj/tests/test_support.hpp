#pragma once

#include "singcount/cohomology.hpp"
#include "singcount/poly.hpp"

#include <random>
#include <string>
#include <vector>

namespace singcount::testing {

inline RingPtr params(std::initializer_list<std::string> names) { return Ring::parameters(names); }

inline Poly P(const std::string& text, const RingPtr& ring) { return parse_poly(text, ring); }

/// Random polynomial with up to `max_terms` terms over the given generator
/// names, exponents <= max_exp, coefficients in [-9, 9].
inline Poly random_poly(std::mt19937& rng, const RingPtr& ring, const std::vector<std::string>& names,
                        int max_terms = 5, int max_exp = 3) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int> exp(0, max_exp);
  std::uniform_int_distribution<int> coeff(-9, 9);
  Poly::Terms terms;
  int n = nterms(rng);
  for (int t = 0; t < n; ++t) {
    std::vector<Monomial::Factor> f;
    for (const auto& name : names) f.emplace_back(name, exp(rng));
    terms[Monomial(std::move(f))] += coeff(rng);
  }
  return Poly::from_terms(ring, std::move(terms));
}

/// All monomials in c1, x1..xm of weight exactly m.
inline std::vector<Monomial> weight_m_monomials(int m) {
  std::vector<Monomial> out;
  // parts[i] = exponent of x_i (i >= 1), c1 absorbs the remainder.
  std::vector<int> exps(static_cast<std::size_t>(m) + 1, 0);
  auto rec = [&](auto&& self, int i, int remaining) -> void {
    if (i > m) {
      std::vector<Monomial::Factor> f;
      if (remaining > 0) f.emplace_back("c1", remaining);
      for (int j = 1; j <= m; ++j)
        if (exps[static_cast<std::size_t>(j)] > 0) f.emplace_back("x" + std::to_string(j), exps[static_cast<std::size_t>(j)]);
      out.emplace_back(std::move(f));
      return;
    }
    for (int e = 0; e * i <= remaining; ++e) {
      exps[static_cast<std::size_t>(i)] = e;
      self(self, i + 1, remaining - e * i);
    }
    exps[static_cast<std::size_t>(i)] = 0;
  };
  rec(rec, 1, m);
  return out;
}

// Rewrite one lambda^m factor at a time, always picking a random offending
// term, until no term has lambda-degree >= m.  Shares nothing with reduce()
// except the truncation rule.
inline Poly naive_reduce(const Poly& p, const Ambient& amb, std::mt19937& rng) {
  const RingPtr ring = amb.ring();
  Poly relation;
  for (int i = 1; i <= amb.m; ++i) {
    Poly term = Poly::generator(ring, "x" + std::to_string(i)) * pow(Poly::generator(ring, "lambda"), amb.m - i);
    relation += (i % 2 == 1) ? term : -term;
  }
  Poly cur = truncate(p.in_ring(ring), amb);
  for (;;) {
    std::vector<std::pair<Monomial, Integer>> offending;
    for (const auto& [mono, c] : cur.terms())
      if (mono.exponent("lambda") >= amb.m) offending.emplace_back(mono, c);
    if (offending.empty()) return cur;
    std::uniform_int_distribution<std::size_t> pick(0, offending.size() - 1);
    const auto& [mono, c] = offending[pick(rng)];
    Poly::Terms single;
    single.emplace(mono, c);
    Poly old_term = Poly::from_terms(ring, single);
    Poly::Terms rest;
    int e = mono.exponent("lambda");
    Monomial lowered = mono.without("lambda") * Monomial::of("lambda", e - amb.m);
    rest.emplace(lowered, c);
    cur = truncate(cur - old_term + Poly::from_terms(ring, rest) * relation, amb);
  }
}

}  // namespace singcount::testing
