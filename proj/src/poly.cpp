#include "singcount/poly.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

namespace singcount {

// ---------------------------------------------------------------- Ring

RingPtr Ring::make(std::vector<Generator> gens) {
  std::sort(gens.begin(), gens.end(),
            [](const Generator& a, const Generator& b) { return a.name < b.name; });
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const auto& g = gens[i];
    if (g.name.empty()) throw std::invalid_argument("generator with empty name");
    if (i > 0 && gens[i - 1].name == g.name)
      throw std::invalid_argument("duplicate generator '" + g.name + "'");
    if (g.kind == GeneratorKind::cohomology && g.weight < 1)
      throw std::invalid_argument("cohomology generator '" + g.name + "' needs weight >= 1");
    if (g.kind == GeneratorKind::parameter && g.weight != 0)
      throw std::invalid_argument("parameter '" + g.name + "' must have weight 0");
  }
  return RingPtr(new Ring(std::move(gens)));
}

RingPtr Ring::empty() {
  static const RingPtr instance = make({});
  return instance;
}

RingPtr Ring::parameters(const std::vector<std::string>& names) {
  std::vector<Generator> gens;
  for (const auto& n : names) {
    if (std::any_of(gens.begin(), gens.end(), [&](const Generator& g) { return g.name == n; }))
      continue;
    gens.push_back({n, GeneratorKind::parameter, 0});
  }
  return make(std::move(gens));
}

RingPtr Ring::chern(int m) {
  std::vector<Generator> gens{{"c1", GeneratorKind::cohomology, 1}};
  for (int i = 1; i <= m; ++i) gens.push_back({"x" + std::to_string(i), GeneratorKind::cohomology, i});
  return make(std::move(gens));
}

RingPtr Ring::ambient(int m, bool projectivized) {
  std::vector<Generator> gens{{"H", GeneratorKind::cohomology, 1}, {"c1", GeneratorKind::cohomology, 1}};
  if (projectivized) gens.push_back({"lambda", GeneratorKind::cohomology, 1});
  for (int i = 1; i <= m; ++i) gens.push_back({"x" + std::to_string(i), GeneratorKind::cohomology, i});
  return make(std::move(gens));
}

const Generator* Ring::find(std::string_view name) const {
  auto it = std::lower_bound(gens_.begin(), gens_.end(), name,
                             [](const Generator& g, std::string_view n) { return g.name < n; });
  if (it == gens_.end() || it->name != name) return nullptr;
  return &*it;
}

int Ring::weight_of(std::string_view name) const {
  const Generator* g = find(name);
  if (!g) throw ContextMismatch("generator '" + std::string(name) + "' is not in the ring");
  return g->kind == GeneratorKind::cohomology ? g->weight : 0;
}

bool Ring::includes(const Ring& other) const {
  return std::all_of(other.gens_.begin(), other.gens_.end(), [&](const Generator& g) {
    const Generator* mine = find(g.name);
    return mine && *mine == g;
  });
}

RingPtr common_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return a;
  if (a->includes(*b)) return a;
  if (b->includes(*a)) return b;
  throw ContextMismatch("polynomials live in incompatible generator contexts");
}

RingPtr merge_rings(const RingPtr& a, const RingPtr& b) {
  if (a == b || a->includes(*b)) return a;
  if (b->includes(*a)) return b;
  std::vector<Generator> gens = a->generators();
  for (const auto& g : b->generators()) {
    const Generator* mine = a->find(g.name);
    if (!mine)
      gens.push_back(g);
    else if (!(*mine == g))
      throw ContextMismatch("generator '" + g.name + "' has conflicting definitions");
  }
  return Ring::make(std::move(gens));
}

// ------------------------------------------------------------ Monomial

Monomial::Monomial(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end());
  for (auto& f : factors) {
    if (f.second < 0) throw std::invalid_argument("negative exponent on '" + f.first + "'");
    if (f.second == 0) continue;
    if (!factors_.empty() && factors_.back().first == f.first)
      factors_.back().second += f.second;
    else
      factors_.push_back(std::move(f));
  }
}

Monomial Monomial::of(std::string name, int exponent) {
  return Monomial({{std::move(name), exponent}});
}

int Monomial::exponent(std::string_view name) const {
  for (const auto& [n, e] : factors_)
    if (n == name) return e;
  return 0;
}

Monomial Monomial::without(std::string_view name) const {
  Monomial out;
  for (const auto& f : factors_)
    if (f.first != name) out.factors_.push_back(f);
  return out;
}

int Monomial::weight(const Ring& ring) const {
  int w = 0;
  for (const auto& [n, e] : factors_) w += ring.weight_of(n) * e;
  return w;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  auto& dst = out.factors_;
  dst.reserve(a.factors_.size() + b.factors_.size());
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() && j != b.factors_.end()) {
    if (i->first < j->first) {
      dst.push_back(*i++);
    } else if (j->first < i->first) {
      dst.push_back(*j++);
    } else {
      dst.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  dst.insert(dst.end(), i, a.factors_.end());
  dst.insert(dst.end(), j, b.factors_.end());
  return out;
}

std::string Monomial::to_string() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const auto& [n, e] : factors_) {
    if (!out.empty()) out += '*';
    out += n;
    if (e != 1) out += '^' + std::to_string(e);
  }
  return out;
}

namespace {

// Lexicographic order on exponent vectors (variables in name order), larger
// exponent first: c1^2 before c1*x1 before x2, d^2 before d before 1.
bool lex_before(const Monomial& a, const Monomial& b) {
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  std::size_t i = 0;
  for (; i < fa.size() && i < fb.size(); ++i) {
    if (fa[i].first != fb[i].first) return fa[i].first < fb[i].first;
    if (fa[i].second != fb[i].second) return fa[i].second > fb[i].second;
  }
  return fa.size() > fb.size();
}

}  // namespace

// ---------------------------------------------------------------- Poly

Poly::Poly(long value) : Poly(Integer(value)) {}

Poly::Poly(const Integer& value) : ring_(Ring::empty()) {
  if (value != 0) terms_.emplace(Monomial(), value);
}

Poly Poly::constant(const Integer& value, RingPtr ring) {
  Poly p(value);
  p.ring_ = std::move(ring);
  return p;
}

Poly Poly::generator(RingPtr ring, std::string_view name, int exponent) {
  if (!ring->contains(name))
    throw ContextMismatch("generator '" + std::string(name) + "' is not in the ring");
  Terms t;
  t.emplace(Monomial::of(std::string(name), exponent), 1);
  return Poly(std::move(ring), std::move(t));
}

Poly Poly::from_terms(RingPtr ring, Terms terms) {
  Poly p(std::move(ring), {});
  for (auto& [mono, c] : terms) {
    for (const auto& f : mono.factors())
      if (!p.ring_->contains(f.first))
        throw ContextMismatch("generator '" + f.first + "' is not in the ring");
    if (c != 0) p.terms_.emplace(mono, c);
  }
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

Integer Poly::constant_term() const {
  auto it = terms_.find(Monomial());
  return it == terms_.end() ? Integer(0) : it->second;
}

bool Poly::uses(std::string_view name) const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [&](const auto& t) { return t.first.exponent(name) > 0; });
}

Poly Poly::in_ring(RingPtr ring) const {
  if (!ring->includes(*ring_)) throw ContextMismatch("target ring does not include the source ring");
  return Poly(std::move(ring), terms_);
}

bool Poly::is_homogeneous() const { return homogeneous_weight().has_value() || terms_.empty(); }

std::optional<int> Poly::homogeneous_weight() const {
  std::optional<int> w;
  for (const auto& [mono, c] : terms_) {
    int mw = mono.weight(*ring_);
    if (w && *w != mw) return std::nullopt;
    w = mw;
  }
  return w;
}

void Poly::add_term(const Monomial& mono, const Integer& coeff) {
  auto [it, inserted] = terms_.try_emplace(mono, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Poly& Poly::operator+=(const Poly& other) {
  ring_ = merge_rings(ring_, other.ring_);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  ring_ = merge_rings(ring_, other.ring_);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out(merge_rings(a.ring_, b.ring_), {});
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

Poly& Poly::operator*=(const Poly& other) { return *this = *this * other; }

std::vector<std::pair<Monomial, Integer>> Poly::ordered_terms() const {
  std::vector<std::pair<int, const Terms::value_type*>> keyed;
  keyed.reserve(terms_.size());
  for (const auto& t : terms_) keyed.emplace_back(t.first.weight(*ring_), &t);
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return lex_before(a.second->first, b.second->first);
  });
  std::vector<std::pair<Monomial, Integer>> out;
  out.reserve(keyed.size());
  for (const auto& [w, t] : keyed) out.emplace_back(t->first, t->second);
  return out;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [mono, coeff] : ordered_terms()) {
    Integer mag = abs(coeff);
    if (first) {
      if (coeff < 0) out += '-';
    } else {
      out += coeff < 0 ? " - " : " + ";
    }
    first = false;
    if (mono.is_unit()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += mono.to_string();
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }
std::ostream& operator<<(std::ostream& os, const Monomial& m) { return os << m.to_string(); }

Poly pow(const Poly& base, unsigned exponent) {
  Poly result = Poly::constant(1, base.ring());
  Poly square = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= square;
    exponent >>= 1U;
    if (exponent > 0) square *= square;
  }
  return result;
}

Poly coefficient_of(const Poly& p, std::string_view generator, int exponent) {
  Poly::Terms out;
  for (const auto& [mono, c] : p.terms())
    if (mono.exponent(generator) == exponent) out.emplace(mono.without(generator), c);
  return Poly::from_terms(p.ring(), std::move(out));
}

Poly substitute(const Poly& p, std::string_view name, const Poly& value) {
  RingPtr ring = merge_rings(p.ring(), value.ring());
  std::map<int, Poly> powers;
  Poly out = Poly::constant(0, ring);
  for (const auto& [mono, c] : p.terms()) {
    int e = mono.exponent(name);
    Poly::Terms rest;
    rest.emplace(mono.without(name), c);
    Poly term = Poly::from_terms(ring, std::move(rest));
    if (e > 0) {
      auto it = powers.find(e);
      if (it == powers.end()) it = powers.emplace(e, pow(value, static_cast<unsigned>(e))).first;
      term *= it->second;
    }
    out += term;
  }
  return out;
}

Integer binomial(long n, long k) {
  if (k < 0) return 0;
  if (n >= 0 && k > n) return 0;
  Integer result;
  Integer top(n);
  mpz_bin_ui(result.get_mpz_t(), top.get_mpz_t(), static_cast<unsigned long>(k));
  return result;
}

// -------------------------------------------------------------- Parser

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const RingPtr& ring) : text_(text), ring_(ring) {}

  Poly parse() {
    Poly p = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial '" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " + what);
  }

  Poly expression() {
    Poly sum = Poly::constant(0, ring_);
    bool negate = false;
    if (accept('-'))
      negate = true;
    else
      accept('+');
    for (;;) {
      Poly t = term();
      sum += negate ? -t : t;
      if (accept('+'))
        negate = false;
      else if (accept('-'))
        negate = true;
      else
        break;
    }
    return sum;
  }

  Poly term() {
    if (accept('-')) return -term();
    Poly product = factor();
    while (accept('*')) product *= factor();
    return product;
  }

  Poly factor() {
    Poly base = primary();
    if (accept('^')) {
      skip_space();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      base = pow(base, static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
    }
    return base;
  }

  Poly primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Poly inner = expression();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Poly::constant(Integer(std::string(text_.substr(start, pos_ - start))), ring_);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      if (!ring_->contains(name)) fail("unknown generator '" + name + "'");
      return Poly::generator(ring_, name);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, const RingPtr& ring) { return PolyParser(text, ring).parse(); }

Monomial parse_monomial(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text == "1") return Monomial();
  if (text.empty()) throw ParseError("empty monomial");
  std::vector<Monomial::Factor> factors;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t star = text.find('*', start);
    std::string_view piece = trim(text.substr(start, star == std::string_view::npos ? std::string_view::npos : star - start));
    std::size_t caret = piece.find('^');
    std::string_view name = trim(piece.substr(0, caret));
    int exponent = 1;
    if (caret != std::string_view::npos) {
      std::string_view e = trim(piece.substr(caret + 1));
      if (e.empty() || !std::all_of(e.begin(), e.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
        throw ParseError("bad exponent in monomial '" + std::string(text) + "'");
      exponent = std::stoi(std::string(e));
      if (exponent < 1) throw ParseError("exponent must be positive in '" + std::string(text) + "'");
    }
    bool ident = !name.empty() && (std::isalpha(static_cast<unsigned char>(name.front())) || name.front() == '_') &&
                 std::all_of(name.begin(), name.end(), [](char ch) {
                   return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_';
                 });
    if (!ident) throw ParseError("bad factor '" + std::string(piece) + "' in monomial '" + std::string(text) + "'");
    factors.emplace_back(std::string(name), exponent);
    if (star == std::string_view::npos) break;
    start = star + 1;
  }
  return Monomial(std::move(factors));
}

}  // namespace singcount
