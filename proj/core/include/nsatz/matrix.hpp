#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "nsatz/poly.hpp"

namespace nsatz {

using PolyMat = std::vector<std::vector<Poly>>;
using RatMat = std::vector<std::vector<Rat>>;

// Determinant of a square polynomial matrix by the Bareiss fraction-free
// scheme; every division is exact in the polynomial ring.
Poly det_fraction_free(PolyMat m);

// Exact Cramer-style solve: x with a*x = det(a)*b, every entry a polynomial.
// One fraction-free forward elimination of the augmented matrix, then an
// exact back substitution; each x_i equals det(a with column i replaced by
// b). When a is singular, det is zero and x is empty. A positive op_budget
// caps the total term-pair work; budget_exceeded is thrown past it.
struct CramerSolve {
  Poly det;
  std::vector<Poly> x;
};
CramerSolve solve_cramer_fraction_free(PolyMat a, std::vector<Poly> b,
                                       std::uint64_t op_budget = 0);

// Exact rank of a rational matrix (fraction-free elimination on the integer
// scaling of each row).
std::size_t rank_exact(RatMat m);

// One exact solution of A x = b with free variables set to zero, or nullopt
// when the system is inconsistent.
std::optional<std::vector<Rat>> solve_exact(RatMat a, std::vector<Rat> b);

// Exact inverse; domain_error when singular.
RatMat invert_exact(RatMat m);

Rat det_exact(RatMat m);

}  // namespace nsatz
