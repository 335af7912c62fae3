#pragma once

#include <vector>

#include "nsatz/poly.hpp"

namespace nsatz {

// Pseudo-division of a by b in the given variable: multiplier * a = quo * b + rem
// with deg_var(rem) < deg_var(b); multiplier is a power of b's leading
// coefficient in var, so everything stays polynomial.
struct PseudoDivision {
  Poly quo;
  Poly rem;
  Poly multiplier;
};
PseudoDivision pseudo_divide(const Poly& a, const Poly& b, std::size_t var);

// Content of a with respect to var: the gcd of its var-coefficients (a
// polynomial in the remaining variables).
Poly content_in_var(const Poly& a, std::size_t var);

// Full polynomial-ring gcd (variable content included; integer content reduced
// to the coefficient gcd). Canonical up to the returned positive content: the
// result's primitive part has positive graded-lex leading coefficient.
Poly gcd(const Poly& a, const Poly& b);
Poly gcd_many(const std::vector<Poly>& ps);

// GCD viewed in K(other vars)[var]: the var-primitive part of gcd(a, b),
// normalized; constant 1 when coprime in var.
Poly gcd_in_var(const Poly& a, const Poly& b, std::size_t var);

}  // namespace nsatz
