#include "nsatz/linear_change.hpp"

#include <random>

namespace nsatz {

namespace {

// Small deterministic value in [-2, 2], avoiding distribution objects whose
// output is implementation-defined.
long small_entry(std::mt19937_64& rng) {
  return static_cast<long>(rng() % 5) - 2;
}

}  // namespace

LinearChange random_linear_change(std::size_t n, std::uint64_t seed) {
  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  return random_linear_change_block(n, seed, all);
}

LinearChange random_linear_change_block(std::size_t n, std::uint64_t seed,
                                        const std::vector<std::size_t>& block) {
  std::mt19937_64 rng(seed);
  const std::size_t k = block.size();
  // Unit lower times unit upper triangular: determinant 1 by construction.
  RatMat lower(k, std::vector<Rat>(k, Rat(0)));
  RatMat upper(k, std::vector<Rat>(k, Rat(0)));
  for (std::size_t i = 0; i < k; ++i) {
    lower[i][i] = Rat(1);
    upper[i][i] = Rat(1);
    for (std::size_t j = 0; j < i; ++j) lower[i][j] = Rat(small_entry(rng));
    for (std::size_t j = i + 1; j < k; ++j) upper[i][j] = Rat(small_entry(rng));
  }
  RatMat m(n, std::vector<Rat>(n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = Rat(1);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      Rat s(0);
      for (std::size_t l = 0; l < k; ++l) s += lower[i][l] * upper[l][j];
      m[block[i]][block[j]] = s;
    }
  return LinearChange{std::move(m), seed};
}

LinearChange inverse(const LinearChange& ch) {
  return LinearChange{invert_exact(ch.matrix), ch.seed};
}

Poly apply_linear_change(const Poly& a, const LinearChange& ch) {
  const std::size_t n = a.nvars();
  if (ch.matrix.size() != n) throw domain_error("linear change dimension mismatch");
  if (det_exact(ch.matrix).is_zero()) throw domain_error("linear change must be invertible");
  std::vector<Poly> values;
  values.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    Poly row = Poly::zero(a.ctx());
    for (std::size_t i = 0; i < n; ++i) {
      if (ch.matrix[j][i].is_zero()) continue;
      row += Poly::variable(a.ctx(), i) * ch.matrix[j][i];
    }
    values.push_back(std::move(row));
  }
  return a.substitute_all(values);
}

std::vector<Rat> map_point(const LinearChange& ch, const std::vector<Rat>& eta) {
  const std::size_t n = ch.matrix.size();
  if (eta.size() != n) throw domain_error("point length mismatch");
  std::vector<Rat> out(n, Rat(0));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) out[j] += ch.matrix[j][i] * eta[i];
  return out;
}

}  // namespace nsatz
