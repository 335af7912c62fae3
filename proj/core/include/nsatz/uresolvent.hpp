#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nsatz/elimination.hpp"
#include "nsatz/ideal.hpp"

namespace nsatz {

// A verified factor x - xi_1 u_1 - .. - xi_n u_n of the u-resolvent; xi is a
// common zero of the input generators.
struct TrueLinearFactor {
  std::vector<Rat> xi;
  int multiplicity = 1;
};

struct UResolvent {
  Ideal input;
  Ideal substituted;  // over (x, x_2..x_n, u_1..u_n)
  std::size_t x_var = 0;
  std::vector<std::size_t> u_vars;
  ResolventChain chain;
  Poly resolvent;  // the complete resolvent Fu of the substituted system

  // True when Fu is free of x_2..x_n, so the solution set is finite and
  // every solution shows up as a linear factor in (x, u).
  bool zero_dimensional = false;

  std::vector<TrueLinearFactor> factors;
  Poly residual;  // resolvent / product of factor powers
  std::vector<std::string> notes;
};

// Substitutes x_1 = (x - u_2 x_2 - .. - u_n x_n) / u_1 into every generator
// and clears denominators by the minimal power of u_1. The returned ideal
// lives over the context (x, x_2..x_n, u_1..u_n); fresh names are chosen on
// collision.
Ideal liouville_substitute(const Ideal& ideal);

// Eliminates x_2..x_n from the substituted system with the u's treated as
// scalars, then splits off the rational true linear factors of the
// resolvent. Each factor is verified by exact division and by evaluating
// the original generators at its coordinate vector.
UResolvent u_resolvent(const Ideal& ideal, std::uint64_t seed);

// Solution points read off the verified factors, in coordinate order.
std::vector<SolutionPoint> extract_points(const UResolvent& ur);

}  // namespace nsatz
