#include "singcount/bundles.hpp"

#include <stdexcept>

namespace singcount {

Poly euler_twisted(const TwistedBundleSpec& spec) {
  if (spec.rank < 1) throw std::invalid_argument("bundle rank must be >= 1");
  if (spec.base_chern.size() != static_cast<std::size_t>(spec.rank) + 1)
    throw std::invalid_argument("base_chern must hold c_0..c_rank");
  if (spec.base_chern.front() != Poly(1)) throw std::invalid_argument("c_0 of a bundle must be 1");
  for (int i = 1; i <= spec.rank; ++i) {
    const Poly& c = spec.base_chern[static_cast<std::size_t>(i)];
    auto w = c.homogeneous_weight();
    if (!c.is_zero() && w != i)
      throw std::invalid_argument("c_" + std::to_string(i) + " is not homogeneous of weight " + std::to_string(i));
  }
  if (!spec.twist.is_zero() && spec.twist.homogeneous_weight() != 1)
    throw std::invalid_argument("twist must be homogeneous of weight 1");

  RingPtr ring = spec.twist.ring();
  for (const auto& c : spec.base_chern) ring = merge_rings(ring, c.ring());

  // Horner in the twist: ((c_0 t + c_1) t + c_2) t + ...
  Poly acc = Poly::constant(0, ring);
  for (const auto& c : spec.base_chern) acc = acc * spec.twist + c;
  return acc;
}

std::vector<Poly> cotangent_chern(int m, const RingPtr& ring) {
  std::vector<Poly> out{Poly::constant(1, ring)};
  for (int i = 1; i <= m; ++i) out.push_back(Poly::generator(ring, "x" + std::to_string(i)));
  return out;
}

namespace {

Poly gen(const RingPtr& ring, const char* name) { return Poly::generator(ring, name); }

}  // namespace

Poly euler_LA0(int m) {
  RingPtr ring = Ring::ambient(m, false);
  return gen(ring, "H") + gen(ring, "c1");
}

Poly euler_VA1(int m) {
  RingPtr ring = Ring::ambient(m, false);
  return euler_twisted({m, cotangent_chern(m, ring), gen(ring, "H") + gen(ring, "c1")});
}

Poly euler_LA2(int m) {
  RingPtr ring = Ring::ambient(m, false);
  return Poly::constant(m, ring) * gen(ring, "H") + Poly::constant(2, ring) * gen(ring, "x1") +
         Poly::constant(m, ring) * gen(ring, "c1");
}

Poly euler_VPA2(int m) {
  RingPtr ring = Ring::ambient(m, true);
  return euler_twisted({m, cotangent_chern(m, ring), gen(ring, "lambda") + gen(ring, "H") + gen(ring, "c1")});
}

Poly euler_LPA3(int m) {
  RingPtr ring = Ring::ambient(m, true);
  return Poly::constant(3, ring) * gen(ring, "lambda") + gen(ring, "H") + gen(ring, "c1");
}

}  // namespace singcount
