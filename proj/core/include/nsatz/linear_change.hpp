#pragma once

#include <cstdint>
#include <vector>

#include "nsatz/matrix.hpp"
#include "nsatz/poly.hpp"

namespace nsatz {

// Invertible change of coordinates x_j <- sum_i m[j][i] * x_i (the context is
// reused for the new coordinates).
struct LinearChange {
  RatMat matrix;
  std::uint64_t seed = 0;
};

// Seeded random invertible change: product of unit lower and unit upper
// triangular matrices with small integer entries, so it is always invertible.
LinearChange random_linear_change(std::size_t n, std::uint64_t seed);

// Same, but mixing only the listed variables; identity elsewhere.
LinearChange random_linear_change_block(std::size_t n, std::uint64_t seed,
                                        const std::vector<std::size_t>& block);

LinearChange inverse(const LinearChange& ch);

Poly apply_linear_change(const Poly& a, const LinearChange& ch);

// Maps a point through the substitution: if b = apply_linear_change(a, ch)
// and b(eta) = 0, then a vanishes at matrix * eta.
std::vector<Rat> map_point(const LinearChange& ch, const std::vector<Rat>& eta);

}  // namespace nsatz
