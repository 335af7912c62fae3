#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "nsatz/ideal.hpp"
#include "nsatz/linear_change.hpp"
#include "nsatz/matrix.hpp"
#include "nsatz/poly.hpp"

namespace nsatz {

// One stage of the Hentzelt elimination. A generator F regular in the stage
// variable of order r reduces every multiple x^j * F_i (i != chosen,
// j = 0..r-1) to a pseudo-remainder of degree < r; the r x r minors of the
// resulting coefficient matrix over the basis 1, x, .., x^{r-1} are the next
// generators.
struct HentzeltStage {
  std::size_t var = 0;
  std::vector<Poly> input_gens;

  // The stage variable was absent from every generator; nothing happens.
  bool pass_through = false;

  std::size_t regular_index = 0;
  Poly regular_poly;
  int order = 0;

  // Pseudo-remainders in generator-major order, with the leading-coefficient
  // power that cleared each row.
  std::vector<Poly> remainder_rows;
  std::vector<Poly> row_multipliers;
  PolyMat coefficient_matrix;  // rows x order, entries free of the variable

  // Nonzero minors after normalization (integer-primitive, positive trailing
  // coefficient), duplicates and multiples removed: the next generators.
  std::vector<Poly> minors;
};

enum class HentzeltTerminal { Zero, Unit };

struct HentzeltChain {
  Ideal input;
  std::optional<LinearChange> change;
  std::vector<Poly> gens;  // generators the chain ran on (after any change)
  std::vector<HentzeltStage> stages;
  HentzeltTerminal terminal = HentzeltTerminal::Zero;
  // Number of stage records present when the terminal state was reached.
  std::size_t terminal_stage = 0;
  int attempts = 0;

  bool has_zeros() const { return terminal == HentzeltTerminal::Zero; }
};

// Runs the chain over all variables in order. Terminal Zero means the system
// has a common zero over the algebraic closure; Unit means it has none.
// Stages without a regular generator trigger a seeded coordinate change and
// a restart, up to the retry cap.
HentzeltChain hentzelt_chain(const Ideal& ideal, std::uint64_t seed);

}  // namespace nsatz
