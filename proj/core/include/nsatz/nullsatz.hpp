#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "nsatz/certificate.hpp"
#include "nsatz/elimination.hpp"
#include "nsatz/ideal.hpp"

namespace nsatz {

// Weak Nullstellensatz decision through the complete resolvent: the system
// has no common zero over the algebraic closure exactly when the resolvent
// is the constant 1, in which case the unit certificate is produced and
// verified.
struct WeakNssResult {
  bool empty = false;
  std::optional<Certificate> certificate;  // present when empty
  ResolventChain chain;
};
WeakNssResult weak_nss(const Ideal& ideal, std::uint64_t seed);

// Radical membership via the Rabinowitsch trick: f is in the radical exactly
// when (gens, x0*f - 1) is the unit ideal; the unit cofactors are turned into
// a certificate f^rho = sum A_i F_i by substituting x0 = 1/f and clearing
// f-denominators.
struct RadicalMembership {
  bool member = false;
  std::optional<Certificate> certificate;  // present when member
  ResolventChain chain;                    // chain of the auxiliary ideal
};
RadicalMembership radical_membership(const Poly& f, const Ideal& ideal, std::uint64_t seed,
                                     bool minimize_rho = false);

// Exact bounded-degree membership: searches for cofactors of total degree at
// most cap by solving the linear system of coefficient constraints.
struct MembershipResult {
  bool member = false;
  std::optional<Certificate> certificate;  // rho = 1
  int cap = 0;
};
MembershipResult ideal_membership_bounded(const Poly& f, const Ideal& ideal, int cap);

// Hilbert function of a homogeneous ideal in degree nu: the number of
// degree-nu monomials minus the exact rank of the multiplication rows
// { m * F_i : deg(m * F_i) = nu }.
int hilbert_function(const Ideal& ideal, int nu);

// Pigeonhole exponent: if x_i^{rho_i} lies in the ideal for every i, then
// every monomial of degree sum (rho_i - 1) + 1 does.
int product_exponent(const std::vector<int>& rhos);

// Weak projective Nullstellensatz for a homogeneous ideal: no projective
// zeros exactly when every variable lies in the radical; the per-variable
// exponents combine into a power of the irrelevant maximal ideal contained
// in the ideal.
struct WpnssPerVar {
  std::size_t var = 0;
  int rho = 1;
  Certificate certificate;
};
struct WpnssResult {
  bool has_projective_zeros = false;
  int exponent = 0;  // meaningful when there are no projective zeros
  std::vector<WpnssPerVar> per_var;
  std::optional<std::size_t> failing_var;
};
WpnssResult weak_projective_nss(const Ideal& ideal, std::uint64_t seed);

}  // namespace nsatz
