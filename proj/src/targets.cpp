#include "singcount/targets.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace singcount {

ChernTarget::ChernTarget(int dimension, RingPtr value_ring)
    : dimension_(dimension), value_ring_(std::move(value_ring)), chern_ring_(Ring::chern(dimension)) {
  if (dimension < 1) throw TargetError("target dimension must be >= 1");
}

Poly ChernTarget::eval_monomial(const Monomial& mono) const {
  for (const auto& [name, e] : mono.factors())
    if (!chern_ring_->contains(name))
      throw TargetError("'" + name + "' is not a Chern class of a " + std::to_string(dimension_) + "-fold");
  int w = mono.weight(*chern_ring_);
  if (w != dimension_)
    throw TargetError("Chern number of " + mono.to_string() + " requested, but its weight is " + std::to_string(w) +
                      " and X has dimension " + std::to_string(dimension_));
  return eval_checked(mono);
}

namespace {

int x_index(const std::string& name) { return std::stoi(name.substr(1)); }

class ProjectiveSpaceTarget final : public ChernTarget {
 public:
  ProjectiveSpaceTarget(int m, Poly degree) : ChernTarget(m, degree.ring()), degree_(std::move(degree)) {}

  Kind kind() const override { return Kind::projective_space; }
  std::vector<Factor> factors() const override { return {{dimension(), degree_}}; }

 protected:
  // c1 -> d h, x_i -> (-1)^i C(m+1, i) h^i, read off h^m.
  Poly eval_checked(const Monomial& mono) const override {
    Poly out = Poly::constant(1, value_ring());
    Integer scalar = 1;
    for (const auto& [name, e] : mono.factors()) {
      if (name == "c1") {
        out *= pow(degree_, static_cast<unsigned>(e));
      } else {
        int i = x_index(name);
        Integer xi = binomial(dimension() + 1, i);
        if (i % 2 == 1) xi = -xi;
        Integer p;
        mpz_pow_ui(p.get_mpz_t(), xi.get_mpz_t(), static_cast<unsigned long>(e));
        scalar *= p;
      }
    }
    return Poly::constant(scalar, value_ring()) * out;
  }

 private:
  Poly degree_;
};

std::string h_name(std::size_t j) { return "_h" + std::to_string(j + 1); }

RingPtr product_aux_ring(const std::vector<int>& dims, const RingPtr& params) {
  std::vector<Generator> gens = params->generators();
  for (std::size_t j = 0; j < dims.size(); ++j) gens.push_back({h_name(j), GeneratorKind::cohomology, 1});
  return Ring::make(std::move(gens));
}

// h_j^{m_j + 1} = 0
Poly truncate_factors(const Poly& p, const std::vector<int>& dims) {
  Poly::Terms kept;
  for (const auto& [mono, c] : p.terms()) {
    bool ok = true;
    for (std::size_t j = 0; j < dims.size() && ok; ++j) ok = mono.exponent(h_name(j)) <= dims[j];
    if (ok) kept.emplace(mono, c);
  }
  return Poly::from_terms(p.ring(), std::move(kept));
}

class ProductTarget final : public ChernTarget {
 public:
  ProductTarget(int m, RingPtr params, std::vector<Factor> factors)
      : ChernTarget(m, params), factors_(std::move(factors)) {
    for (const auto& f : factors_) dims_.push_back(f.dim);
    aux_ = product_aux_ring(dims_, params);
    c1_ = Poly::constant(0, aux_);
    for (std::size_t j = 0; j < factors_.size(); ++j)
      c1_ += factors_[j].degree * Poly::generator(aux_, h_name(j));
    auto xs = product_cotangent_chern(dims_);
    for (auto& x : xs) x_.push_back(x.in_ring(aux_));
  }

  Kind kind() const override { return Kind::product_of_projective_spaces; }
  std::vector<Factor> factors() const override { return factors_; }

 protected:
  Poly eval_checked(const Monomial& mono) const override {
    Poly acc = Poly::constant(1, aux_);
    for (const auto& [name, e] : mono.factors()) {
      const Poly& base = name == "c1" ? c1_ : x_[static_cast<std::size_t>(x_index(name))];
      for (int r = 0; r < e; ++r) acc = truncate_factors(acc * base, dims_);
    }
    Poly::Terms out;
    for (const auto& [m, c] : acc.terms()) {
      Monomial rest = m;
      bool top = true;
      for (std::size_t j = 0; j < dims_.size(); ++j) {
        top = top && m.exponent(h_name(j)) == dims_[j];
        rest = rest.without(h_name(j));
      }
      if (top) out.emplace(rest, c);
    }
    return Poly::from_terms(value_ring(), std::move(out));
  }

 private:
  std::vector<Factor> factors_;
  std::vector<int> dims_;
  RingPtr aux_;
  Poly c1_;
  std::vector<Poly> x_;
};

class TableTarget final : public ChernTarget {
 public:
  TableTarget(int m, std::map<Monomial, Integer> entries)
      : ChernTarget(m, Ring::empty()), entries_(std::move(entries)) {}

  Kind kind() const override { return Kind::table; }

 protected:
  Poly eval_checked(const Monomial& mono) const override {
    auto it = entries_.find(mono);
    if (it == entries_.end()) throw TargetError("table has no entry for " + mono.to_string());
    return Poly(it->second);
  }

 private:
  std::map<Monomial, Integer> entries_;
};

class GenericTarget final : public ChernTarget {
 public:
  explicit GenericTarget(int m) : ChernTarget(m, Ring::chern(m)) {}

  Kind kind() const override { return Kind::generic; }

 protected:
  Poly eval_checked(const Monomial& mono) const override {
    Poly::Terms t;
    t.emplace(mono, 1);
    return Poly::from_terms(value_ring(), std::move(t));
  }
};

void check_degree(const Poly& d) {
  if (d.is_constant()) return;
  if (d.terms().size() == 1 && d.terms().begin()->second == 1) {
    const auto& f = d.terms().begin()->first.factors();
    if (f.size() == 1 && f.front().second == 1) {
      const Generator* g = d.ring()->find(f.front().first);
      if (g && g->kind == GeneratorKind::parameter) return;
    }
  }
  throw TargetError("degree must be an integer or a single parameter, got " + d.to_string());
}

}  // namespace

std::vector<Poly> product_cotangent_chern(const std::vector<int>& dims) {
  RingPtr ring = product_aux_ring(dims, Ring::empty());
  int m = 0;
  Poly total = Poly::constant(1, ring);
  for (std::size_t j = 0; j < dims.size(); ++j) {
    if (dims[j] < 1) throw TargetError("projective factor dimension must be >= 1");
    m += dims[j];
    Poly one_minus_h = Poly::constant(1, ring) - Poly::generator(ring, h_name(j));
    total = truncate_factors(total * pow(one_minus_h, static_cast<unsigned>(dims[j] + 1)), dims);
  }
  std::vector<Poly> xs(static_cast<std::size_t>(m) + 1, Poly::constant(0, ring));
  for (const auto& [mono, c] : total.terms()) {
    Poly::Terms t;
    t.emplace(mono, c);
    xs[static_cast<std::size_t>(mono.weight(*ring))] += Poly::from_terms(ring, std::move(t));
  }
  return xs;
}

TargetPtr make_pm(int m, const Poly& degree) {
  check_degree(degree);
  if (m < 1) throw TargetError("P^m needs m >= 1");
  return std::make_shared<ProjectiveSpaceTarget>(m, degree);
}

TargetPtr make_pm(int m, long degree) { return make_pm(m, Poly(degree)); }

TargetPtr make_pm(int m, const std::string& degree_symbol) {
  return make_pm(m, Poly::generator(Ring::parameters({degree_symbol}), degree_symbol));
}

TargetPtr make_product(const std::vector<ChernTarget::Factor>& factors) {
  if (factors.empty()) throw TargetError("a product target needs at least one factor");
  int m = 0;
  RingPtr params = Ring::empty();
  for (const auto& f : factors) {
    check_degree(f.degree);
    if (f.dim < 1) throw TargetError("projective factor dimension must be >= 1");
    m += f.dim;
    params = merge_rings(params, f.degree.ring());
  }
  std::vector<ChernTarget::Factor> normalized;
  for (const auto& f : factors) normalized.push_back({f.dim, f.degree.in_ring(params)});
  return std::make_shared<ProductTarget>(m, params, std::move(normalized));
}

TargetPtr make_table(int m, const std::map<std::string, Integer>& entries) {
  if (m < 1) throw TargetError("table dimension must be >= 1");
  RingPtr chern = Ring::chern(m);
  std::map<Monomial, Integer> parsed;
  for (const auto& [key, value] : entries) {
    Monomial mono;
    try {
      mono = parse_monomial(key);
    } catch (const ParseError& e) {
      throw TargetError(std::string("malformed table key: ") + e.what());
    }
    // Factors must be written in sorted order without repeats.
    std::string previous;
    std::size_t start = 0;
    while (start < key.size()) {
      std::size_t star = key.find('*', start);
      std::string piece = key.substr(start, star == std::string::npos ? std::string::npos : star - start);
      std::string name = piece.substr(0, piece.find('^'));
      if (!previous.empty() && name <= previous)
        throw TargetError("table key '" + key + "' must list factors in sorted order");
      previous = name;
      if (star == std::string::npos) break;
      start = star + 1;
    }
    for (const auto& [name, e] : mono.factors())
      if (!chern->contains(name)) throw TargetError("table key '" + key + "' uses unknown class '" + name + "'");
    if (mono.weight(*chern) != m)
      throw TargetError("table key '" + key + "' is not of weight " + std::to_string(m));
    if (!parsed.emplace(mono, value).second) throw TargetError("duplicate table key '" + key + "'");
  }
  return std::make_shared<TableTarget>(m, std::move(parsed));
}

TargetPtr make_generic(int m) { return std::make_shared<GenericTarget>(m); }

TargetPtr parse_table_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw TargetError(std::string("table file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw TargetError("table document must be a JSON object");
  if (!doc.contains("dimension") || !doc["dimension"].is_number_integer())
    throw TargetError("table document needs an integer 'dimension'");
  if (!doc.contains("entries") || !doc["entries"].is_object())
    throw TargetError("table document needs an 'entries' object");
  std::map<std::string, Integer> entries;
  for (const auto& [key, value] : doc["entries"].items()) {
    Integer v;
    if (value.is_number_integer()) {
      v = Integer(value.dump());
    } else if (value.is_string()) {
      const auto& s = value.get_ref<const std::string&>();
      if (v.set_str(s, 10) != 0) throw TargetError("entry '" + key + "' is not an integer: " + s);
    } else {
      throw TargetError("entry '" + key + "' must be an integer");
    }
    entries.emplace(key, v);
  }
  return make_table(doc["dimension"].get<int>(), entries);
}

TargetPtr load_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw TargetError("cannot open table file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_table_json(buffer.str());
}

}  // namespace singcount
