#pragma once

#include <vector>

#include "nsatz/poly.hpp"

namespace nsatz {

struct RootMult {
  Rat root;
  int multiplicity = 0;
};

// All rational roots (with multiplicities) of a nonzero polynomial that is
// univariate in var (no other variable may occur). Complete by the rational
// root theorem; divisor enumeration uses exact integer factorization.
std::vector<RootMult> rational_roots(const Poly& p, std::size_t var);

// Extended gcd of a list of nonzero polynomials univariate in var:
// g = sum_i cofactors[i] * ps[i], with g integer-primitive and positive
// leading coefficient (or g = 1 when the inputs are coprime).
struct UnivariateExtGcd {
  Poly g;
  std::vector<Poly> cofactors;
};
UnivariateExtGcd extended_gcd_univariate(const std::vector<Poly>& ps, std::size_t var);

}  // namespace nsatz
