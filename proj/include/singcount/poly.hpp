#pragma once

// Exact multivariate polynomials over arbitrary-precision integers.
//
// Every polynomial lives in a Ring: an immutable, name-sorted list of
// generators.  Cohomology generators carry a positive complex degree
// ("weight"); parameter generators (degrees d, d1, ...) have weight 0.
// Arithmetic works over the union of the operands' rings; a generator name
// that appears in both with a different kind or weight is a ContextMismatch.

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace singcount {

using Integer = mpz_class;

enum class GeneratorKind { cohomology, parameter };

struct Generator {
  std::string name;
  GeneratorKind kind = GeneratorKind::cohomology;
  int weight = 1;

  friend bool operator==(const Generator&, const Generator&) = default;
};

class ContextMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

class Ring {
 public:
  /// Generators are sorted by name; duplicate names, cohomology generators
  /// of weight < 1 and parameters of nonzero weight are rejected.
  static RingPtr make(std::vector<Generator> gens);

  static RingPtr empty();
  static RingPtr parameters(const std::vector<std::string>& names);
  /// c1, x1..xm.
  static RingPtr chern(int m);
  /// H, c1, x1..xm, plus lambda when projectivized.
  static RingPtr ambient(int m, bool projectivized);

  const std::vector<Generator>& generators() const { return gens_; }
  const Generator* find(std::string_view name) const;
  bool contains(std::string_view name) const { return find(name) != nullptr; }
  int weight_of(std::string_view name) const;

  /// True when every generator of `other` appears here with the same kind
  /// and weight.
  bool includes(const Ring& other) const;

  friend bool operator==(const Ring& a, const Ring& b) { return a.gens_ == b.gens_; }

 private:
  explicit Ring(std::vector<Generator> gens) : gens_(std::move(gens)) {}
  std::vector<Generator> gens_;
};

/// The ring that contains both, or ContextMismatch.
RingPtr common_ring(const RingPtr& a, const RingPtr& b);

/// Union of the generator sets; ContextMismatch when a shared name differs
/// in kind or weight.
RingPtr merge_rings(const RingPtr& a, const RingPtr& b);

/// Sorted (by generator name) list of (name, exponent) with exponents >= 1.
class Monomial {
 public:
  using Factor = std::pair<std::string, int>;

  Monomial() = default;
  explicit Monomial(std::vector<Factor> factors);
  static Monomial of(std::string name, int exponent = 1);

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_unit() const { return factors_.empty(); }
  int exponent(std::string_view name) const;

  /// Copy with `name` removed.
  Monomial without(std::string_view name) const;

  /// Sum of weight * exponent over the ring's cohomology generators.
  int weight(const Ring& ring) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

  /// `c1^2*x1`, or `1` for the unit monomial.
  std::string to_string() const;

 private:
  std::vector<Factor> factors_;
};

class Poly {
 public:
  using Terms = std::map<Monomial, Integer>;

  Poly() : ring_(Ring::empty()) {}
  Poly(long value);  // NOLINT(google-explicit-constructor)
  Poly(const Integer& value);  // NOLINT(google-explicit-constructor)

  static Poly constant(const Integer& value, RingPtr ring);
  static Poly generator(RingPtr ring, std::string_view name, int exponent = 1);
  static Poly from_terms(RingPtr ring, Terms terms);

  const RingPtr& ring() const { return ring_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term (0 when absent).
  Integer constant_term() const;
  bool uses(std::string_view name) const;

  /// Same polynomial, viewed in a ring that includes the current one.
  Poly in_ring(RingPtr ring) const;

  /// Zero counts as homogeneous; homogeneous_weight() is empty for it.
  bool is_homogeneous() const;
  std::optional<int> homogeneous_weight() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);

  /// Structural equality of canonical forms; the rings are not compared.
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

  /// Terms ordered by (weight desc, lexicographic monomial desc).
  std::vector<std::pair<Monomial, Integer>> ordered_terms() const;
  std::string to_string() const;

 private:
  Poly(RingPtr ring, Terms terms) : ring_(std::move(ring)), terms_(std::move(terms)) {}
  void add_term(const Monomial& mono, const Integer& coeff);

  RingPtr ring_;
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);
std::ostream& operator<<(std::ostream& os, const Monomial& m);

Poly pow(const Poly& base, unsigned exponent);

/// The q with p = q*g^e + (terms whose g-exponent differs from e).
Poly coefficient_of(const Poly& p, std::string_view generator, int exponent);

/// Replace every occurrence of `name` by `value`.
Poly substitute(const Poly& p, std::string_view name, const Poly& value);

/// Binomial coefficient, 0 for k < 0 or k > n >= 0; negative n uses the
/// generalized definition.
Integer binomial(long n, long k);

/// Parse a polynomial expression (integers, identifiers, + - * ^ and
/// parentheses).  Every identifier must be a generator of `ring`.
Poly parse_poly(std::string_view text, const RingPtr& ring);

/// Parse a single monomial `a^2*b*c^3`; `1` is the unit monomial.
Monomial parse_monomial(std::string_view text);

}  // namespace singcount
