#pragma once

#include <string>
#include <vector>

#include "nsatz/poly.hpp"

namespace nsatz {

// Finitely generated ideal of Q[x_1..x_n]. Generators share the context and
// none is the zero polynomial; an empty list denotes the zero ideal.
struct Ideal {
  CtxPtr ctx;
  std::vector<Poly> gens;
};

// Throws domain_error on zero generators or context mismatches.
void validate_ideal(const Ideal& ideal);

Ideal ideal_from_strings(const CtxPtr& ctx, const std::vector<std::string>& texts);

}  // namespace nsatz
