#pragma once

#include "nsatz/matrix.hpp"
#include "nsatz/poly.hpp"

namespace nsatz {

// Sylvester matrix of f (formal degree m) and g (formal degree n) in var:
// (m+n) x (m+n); rows 0..n-1 carry the descending coefficients a_0..a_m of f
// shifted right by the row index, rows n..n+m-1 likewise carry b_0..b_n of g.
struct SylvesterMatrix {
  PolyMat entries;
  int m = 0;
  int n = 0;
  std::size_t var = 0;
};

// Formal degrees must satisfy m >= deg_var(f), n >= deg_var(g), m + n >= 1.
SylvesterMatrix sylvester(const Poly& f, const Poly& g, std::size_t var, int m, int n);

// Resultant in var. Formal degrees default to the true degrees (zero for a
// polynomial free of var).
Poly resultant(const Poly& f, const Poly& g, std::size_t var, int m = -1, int n = -1);

// Cofactor identity v*f + u*g = value with deg_var(v) < n and deg_var(u) < m.
// When value = 0 a nontrivial pair with v*f + u*g = 0 is produced instead.
// A positive op_budget bounds the elimination work (see
// solve_cramer_fraction_free); budget_exceeded propagates to the caller.
struct ResultantResult {
  Poly value;
  Poly u;
  Poly v;
  int m = 0;
  int n = 0;
};

ResultantResult resultant_with_cofactors(const Poly& f, const Poly& g, std::size_t var,
                                         int m = -1, int n = -1,
                                         std::uint64_t op_budget = 0);

}  // namespace nsatz
