#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nsatz/ideal.hpp"
#include "nsatz/linear_change.hpp"
#include "nsatz/poly.hpp"

namespace nsatz {

// One stage of Kronecker's successive elimination. The stage divides the
// input generators by their gcd D, forms a resultant in `var` that carries
// auxiliary indeterminates, and reads the next generators off as the
// coefficients of the distinct auxiliary monomials. Each next generator
// keeps a cofactor row expressing it as a combination of the phis.
struct EliminationStep {
  std::size_t var = 0;
  std::vector<Poly> input_gens;
  Poly D;
  std::vector<Poly> phis;

  // Coefficients of the auxiliary monomials of the device resultant, zeros
  // dropped, paired index-wise with aux_monomials and cofactors.
  std::vector<Poly> next_gens;
  std::vector<std::string> aux_monomials;
  std::vector<std::vector<Poly>> cofactors;  // next_gens[k] == sum_j cofactors[k][j] * phis[j]

  // The resultant over the extended context before coefficient extraction.
  CtxPtr device_ctx;
  std::optional<Poly> device_det;

  // Index of the generator used as the first resultant argument when the
  // one-sided shortcut applies; empty for the full two-form device. Inside a
  // chain, stages with more generators than surviving coordinates plus one
  // run the device on that many seeded random combinations of the phis (the
  // zero set is unchanged), and the index then refers to that working basis;
  // cofactor rows are always written against the phis themselves.
  std::optional<std::size_t> shortcut_index;

  // Every phi was free of `var` after dividing by D; the stage passes the
  // phis through unchanged with identity cofactors.
  bool trivial = false;

  // `var` was absent from the input generators altogether; D = 1 and the
  // generators pass through untouched.
  bool pass_through = false;

  // The reduced generating set handed to the following stage: integer
  // content stripped, duplicates and multiples removed. Rows of
  // kept_cofactors are scaled to preserve kept_gens[k] == sum_j row[j]*phis[j].
  std::vector<Poly> kept_gens;
  std::vector<std::vector<Poly>> kept_cofactors;
};

EliminationStep kronecker_step(const std::vector<Poly>& gens, std::size_t var);

struct ResolventChain {
  Ideal input;
  std::optional<LinearChange> change;
  std::vector<Poly> gens;  // generators the chain ran on (after any change)
  std::vector<std::size_t> elim_vars;
  std::vector<EliminationStep> steps;
  std::vector<Poly> final_gens;

  // One partial resolvent per stage (the stage D), plus the gcd of the
  // final generators. Their product is the complete resolvent.
  std::vector<Poly> partial_resolvents;
  Poly complete_resolvent;

  // When the final generators are univariate or contain a constant,
  // cofactors composed through the stages so that
  // complete_resolvent == sum_i resolvent_cofactors[i] * gens[i].
  std::optional<std::vector<Poly>> resolvent_cofactors;

  int attempts = 0;  // 0 means no coordinate change was needed
};

struct ChainOptions {
  std::vector<std::size_t> elim_vars;
  // Variables treated as scalars when testing regularity (coefficient
  // indeterminates of a parametric ideal).
  std::vector<std::size_t> scalar_vars;
  // Variables a retry's coordinate change is allowed to mix; defaults to
  // all variables when empty.
  std::vector<std::size_t> change_block;
  int max_retries = 8;
};

ResolventChain run_elimination_chain(const Ideal& ideal, std::uint64_t seed,
                                     const ChainOptions& options);

// Eliminates x_1..x_{n-1} in order, leaving the last variable.
ResolventChain kronecker_resolvent(const Ideal& ideal, std::uint64_t seed);

struct SolutionPoint {
  std::vector<Rat> coords;
};

struct BackSubstitution {
  std::vector<SolutionPoint> points;
  // False when some branch could not be carried to the end: an irrational
  // root kept symbolically, or a variable left unconstrained.
  bool complete = true;
  std::vector<std::string> notes;
};

// Walks the chain backwards from the roots of the last partial resolvent,
// extending one coordinate per stage, then verifies each candidate against
// the original generators. Points are reported in the input coordinates.
BackSubstitution back_substitute(const ResolventChain& chain, const Ideal& ideal);

}  // namespace nsatz
