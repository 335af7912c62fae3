#pragma once

#include <vector>

#include "nsatz/ideal.hpp"
#include "nsatz/poly.hpp"

namespace nsatz {

enum class CertKind {
  Unit,     // 1 = sum_i cofactors[i] * gens[i]
  Radical,  // target^rho = sum_i cofactors[i] * gens[i]
};

struct Certificate {
  CertKind kind = CertKind::Unit;
  Poly target;  // the constant 1 for Unit certificates
  int rho = 1;
  std::vector<Poly> cofactors;  // one per ideal generator, in order
};

// Checks sum_i cofactors[i] * gens[i] == target^rho by exact expansion. A
// Unit certificate additionally requires target == 1 and rho == 1. Throws
// domain_error when the cofactor count does not match the generator count.
bool verify_certificate(const Certificate& cert, const Ideal& ideal);

}  // namespace nsatz
