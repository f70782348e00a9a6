#pragma once

// Euler classes of the bundles whose sections cut out the singular loci,
// built with the splitting principle.
//
//   L_A0  = gamma_D^* (x) L                           e = H + c1
//   V_A1  = gamma_D^* (x) T*X (x) L                   e = sum x_i (H + c1)^{m-i}
//   L_A2  = gamma_D^{*m} (x) (Lambda^m T*X)^2 (x) L^m e = m H + 2 x1 + m c1
//   V_PA2 = gammahat^* (x) gamma_D^* (x) T*X (x) L    e = sum x_i (lambda + H + c1)^{m-i}
//   L_PA3 = gammahat^{*3} (x) gamma_D^* (x) L         e = 3 lambda + H + c1

#include "singcount/poly.hpp"

#include <vector>

namespace singcount {

struct TwistedBundleSpec {
  int rank = 0;
  /// c_0 = 1, c_1, ..., c_rank of the untwisted bundle E.
  std::vector<Poly> base_chern;
  /// First Chern class of the twisting line bundle.
  Poly twist;
};

/// e(E (x) M) = sum_{i=0..r} c_i(E) c1(M)^{r-i}.
Poly euler_twisted(const TwistedBundleSpec& spec);

/// Chern classes 1, x1, ..., xm of T*X inside `ring`.
std::vector<Poly> cotangent_chern(int m, const RingPtr& ring);

Poly euler_LA0(int m);
Poly euler_VA1(int m);
Poly euler_LA2(int m);
Poly euler_VPA2(int m);
Poly euler_LPA3(int m);

}  // namespace singcount
