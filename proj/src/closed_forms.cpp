#include "singcount/closed_forms.hpp"

#include <stdexcept>

namespace singcount {

namespace {

Poly divide_exact(const Poly& p, const Integer& divisor) {
  Poly::Terms out;
  for (const auto& [mono, c] : p.terms()) {
    if (!mpz_divisible_p(c.get_mpz_t(), divisor.get_mpz_t()))
      throw std::domain_error("coefficient " + c.get_str() + " is not divisible by " + divisor.get_str());
    out.emplace(mono, Integer(c / divisor));
  }
  return Poly::from_terms(p.ring(), std::move(out));
}

Poly scalar(const Integer& v, const RingPtr& ring) { return Poly::constant(v, ring); }

}  // namespace

Poly formula_closed(SingClass sing, int m) {
  if (m < 1) throw std::invalid_argument("dimension must be >= 1");
  const RingPtr ring = Ring::chern(m);
  const Poly c1 = Poly::generator(ring, "c1");
  std::vector<Poly> x{Poly::constant(1, ring)};
  for (int i = 1; i <= m; ++i) x.push_back(Poly::generator(ring, "x" + std::to_string(i)));
  auto c1_pow = [&](int e) { return pow(c1, static_cast<unsigned>(e)); };

  Poly total = Poly::constant(0, ring);
  switch (sing) {
    case SingClass::A1:
      for (int i = 0; i <= m; ++i) total += scalar(m + 1 - i, ring) * x[i] * c1_pow(m - i);
      break;

    case SingClass::A2:
      for (int i = 0; i <= m; ++i) total += scalar(m * binomial(m + 2 - i, 2), ring) * x[i] * c1_pow(m - i);
      for (int i = 0; i <= m - 1; ++i)
        total += scalar(2 * binomial(m + 1 - i, 2), ring) * x[1] * x[i] * c1_pow(m - i - 1);
      break;

    case SingClass::A3: {
      // (3m^2 - m)/2 is always an integer.
      const Integer half = Integer(m) * (3 * m - 1) / 2;
      const Integer lead = 3 * m * m - m;
      const Integer mixed = 6 * m - 1;
      const Poly& x1 = x[1];
      for (int i = 0; i <= m - 2; ++i) {
        Poly t2 = scalar(binomial(m + 1 - i, 3), ring) *
                  (scalar(half, ring) * c1 * c1 + scalar(mixed, ring) * c1 * x1 + scalar(6, ring) * x1 * x1);
        total += t2 * c1_pow(m - i - 2) * x[i];
      }
      for (int i = 0; i <= m - 1; ++i) {
        Poly t1 = scalar(binomial(m + 1 - i, 2), ring) * (scalar(lead, ring) * c1 + scalar(mixed, ring) * x1);
        total += t1 * c1_pow(m - i - 1) * x[i];
      }
      for (int i = 0; i <= m; ++i) total += scalar(binomial(m + 1 - i, 1) * half, ring) * c1_pow(m - i) * x[i];
      break;
    }
  }
  return total;
}

Poly pm_closed(SingClass sing, int m, const Poly& d) {
  if (m < 1) throw std::invalid_argument("dimension must be >= 1");
  const Poly d_minus_1 = d - Poly(1);
  const Integer mm(m);
  switch (sing) {
    case SingClass::A1:
      return Poly(mm + 1) * pow(d_minus_1, static_cast<unsigned>(m));
    case SingClass::A2: {
      Integer lead = mm * (mm + 1) * (mm + 2) / 2;
      return Poly(lead) * pow(d_minus_1, static_cast<unsigned>(m - 1)) * (d - Poly(2));
    }
    case SingClass::A3: {
      if (m < 2) throw std::domain_error("the P^m tacnode closed form needs m >= 2");
      Integer m2 = mm * mm + 2 * mm - 1;
      Integer m1 = -12 * mm * mm - 28 * mm + 8;
      Integer m0 = 3 * mm * mm + 8 * mm - 3;
      Poly quadratic = Poly(m2) * d * d + Poly(m1) * d + Poly(m0);
      Poly scaled = Poly(mm * (mm + 1) * (mm + 2)) * pow(d_minus_1, static_cast<unsigned>(m - 2)) * quadratic;
      return divide_exact(scaled, 12);
    }
  }
  throw std::logic_error("unknown singularity class");
}

Poly p1p1_closed(SingClass sing, const Poly& d1, const Poly& d2) {
  switch (sing) {
    case SingClass::A1:
      return Poly(6) * d1 * d2 - Poly(4) * (d1 + d2) + Poly(4);
    case SingClass::A2:
      return Poly(24) * (d1 - Poly(1)) * (d2 - Poly(1));
    case SingClass::A3:
      return Poly(100) * d1 * d2 - Poly(128) * (d1 + d2) + Poly(136);
  }
  throw std::logic_error("unknown singularity class");
}

Poly apply_chern_numbers(const Poly& formula, const std::map<Monomial, Poly>& numbers) {
  Poly total;
  for (const auto& [mono, c] : formula.terms()) {
    auto it = numbers.find(mono);
    if (it == numbers.end()) throw std::out_of_range("no Chern number supplied for " + mono.to_string());
    total += Poly(c) * it->second;
  }
  return total;
}

DiscrepancyReport compare(const Poly& engine, const Poly& reference, std::string context) {
  return {std::move(context), engine, reference, engine == reference};
}

}  // namespace singcount
