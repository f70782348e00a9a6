#pragma once

// Chern-number evaluators for a concrete or symbolic pair (X, L): each maps
// a weight-m monomial in c1, x1..xm to a polynomial in the degree
// parameters.

#include "singcount/poly.hpp"

#include <filesystem>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace singcount {

class TargetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ChernTarget {
 public:
  enum class Kind { projective_space, product_of_projective_spaces, table, generic };

  struct Factor {
    int dim = 1;
    Poly degree;  // integer constant or a parameter
  };

  virtual ~ChernTarget() = default;

  virtual Kind kind() const = 0;
  int dimension() const { return dimension_; }
  /// Ring of the values returned by eval_monomial.
  const RingPtr& value_ring() const { return value_ring_; }

  /// Monomial must have weight exactly m in c1, x1..xm.
  Poly eval_monomial(const Monomial& mono) const;

  /// Product factors for product targets; a single factor for P^m.
  virtual std::vector<Factor> factors() const { return {}; }

 protected:
  ChernTarget(int dimension, RingPtr value_ring);
  virtual Poly eval_checked(const Monomial& mono) const = 0;

 private:
  int dimension_;
  RingPtr value_ring_;
  RingPtr chern_ring_;
};

using TargetPtr = std::shared_ptr<const ChernTarget>;

/// P^m with L = O(d); d is an integer or a parameter name.
TargetPtr make_pm(int m, const Poly& degree);
TargetPtr make_pm(int m, long degree);
TargetPtr make_pm(int m, const std::string& degree_symbol);

/// P^{m_1} x ... x P^{m_r} with L = O(d_1, ..., d_r).
TargetPtr make_product(const std::vector<ChernTarget::Factor>& factors);

/// Explicit Chern numbers; keys are canonical monomial strings such as
/// `c1^2`, `c1*x1`, `x2`.
TargetPtr make_table(int m, const std::map<std::string, Integer>& entries);

/// Returns each monomial unchanged, so counts come out as formulas in
/// c1, x1..xm.
TargetPtr make_generic(int m);

/// Table target from a JSON document {"dimension": m, "entries": {...}};
/// entry values are integers or decimal strings.
TargetPtr load_table(const std::filesystem::path& path);
TargetPtr parse_table_json(const std::string& text);

/// T*X Chern class x_i of a product of projective spaces, as a polynomial
/// in the hyperplane classes `_h1`, `_h2`, ... (1-based factor index).
std::vector<Poly> product_cotangent_chern(const std::vector<int>& dims);

}  // namespace singcount
