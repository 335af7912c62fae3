#include "oracle.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

#include "nsatz/errors.hpp"

namespace oracle {

using nsatz::CtxPtr;
using nsatz::Ideal;
using nsatz::Poly;
using nsatz::PolyMat;
using nsatz::Rat;

Poly det_naive(const PolyMat& m) {
  std::size_t n = m.size();
  if (n == 0 || n > 6) throw nsatz::domain_error("det_naive: size must be 1..6");
  for (const auto& row : m)
    if (row.size() != n) throw nsatz::domain_error("det_naive: matrix not square");
  if (n == 1) return m[0][0];
  CtxPtr ctx = m[0][0].ctx();
  Poly acc = Poly::zero(ctx);
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    PolyMat minor;
    minor.reserve(n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Poly> row;
      row.reserve(n - 1);
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    Poly piece = m[0][j] * det_naive(minor);
    if (j % 2 == 0)
      acc += piece;
    else
      acc -= piece;
  }
  return acc;
}

Rat evaluate(const Poly& p, const std::vector<Rat>& point) {
  if (point.size() != p.nvars())
    throw nsatz::domain_error("evaluate: dimension mismatch");
  Rat total;
  for (const auto& [e, c] : p.terms()) {
    Rat mono = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (unsigned k = 0; k < e[i]; ++k) mono *= point[i];
    total += mono;
  }
  return total;
}

namespace {

// Row reduction of an augmented system, written here so the oracle does not
// depend on the library's matrix kernels.
struct Reduction {
  bool consistent = true;
  std::size_t rank = 0;
  std::vector<Rat> solution;  // meaningful when consistent and rank == n
};

Reduction reduce(std::vector<std::vector<Rat>> aug, std::size_t n) {
  Reduction out;
  std::size_t rows = aug.size();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && aug[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(aug[p], aug[r]);
    Rat inv = aug[r][c].inv();
    for (auto& x : aug[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || aug[i][c].is_zero()) continue;
      Rat f = aug[i][c];
      for (std::size_t k = c; k <= n; ++k) aug[i][k] -= f * aug[r][k];
    }
    pivot_col.push_back(c);
    ++r;
  }
  out.rank = r;
  for (std::size_t i = r; i < rows; ++i)
    if (!aug[i][n].is_zero()) out.consistent = false;
  if (out.consistent && r == n) {
    out.solution.assign(n, Rat());
    for (std::size_t i = 0; i < r; ++i) out.solution[pivot_col[i]] = aug[i][n];
  }
  return out;
}

}  // namespace

Ideal vanishing_generators(const PointSet& ps, std::size_t n,
                           std::uint64_t seed) {
  if (n == 0) throw nsatz::domain_error("vanishing_generators: no variables");
  if (ps.points.empty())
    throw nsatz::domain_error("vanishing_generators: empty point set");
  for (const auto& pt : ps.points)
    if (pt.size() != n)
      throw nsatz::domain_error("vanishing_generators: coordinate count mismatch");
  for (std::size_t i = 0; i < ps.points.size(); ++i)
    for (std::size_t j = i + 1; j < ps.points.size(); ++j)
      if (ps.points[i] == ps.points[j])
        throw nsatz::domain_error("vanishing_generators: points must be distinct");

  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
  CtxPtr ctx = nsatz::make_ctx(names);

  std::size_t npts = ps.points.size();
  std::size_t ngens = n + 1;

  for (std::uint64_t attempt = 0; attempt < 64; ++attempt) {
    std::mt19937_64 rng(seed + 1000003ull * attempt);
    std::uniform_int_distribution<int> nz(1, 3);

    // coeffs[g][p] is the coefficient row of the linear form generator g uses
    // to kill point p. The first generator keeps every coordinate in every
    // factor, so its product has a constant leading coefficient in each
    // variable; the others draw small supports to keep the products sparse,
    // widening on later attempts if the exactness check keeps rejecting.
    std::vector<std::vector<std::vector<Rat>>> coeffs(
        ngens, std::vector<std::vector<Rat>>(npts));
    std::size_t support = std::min<std::size_t>(n, 1 + attempt / 8);
    for (std::size_t g = 0; g < ngens; ++g)
      for (std::size_t p = 0; p < npts; ++p) {
        std::vector<Rat> row(n);
        if (g == 0) {
          for (auto& x : row) {
            int c = nz(rng);
            x = Rat((rng() & 1) ? c : -c);
          }
        } else {
          std::vector<std::size_t> idx(n);
          std::iota(idx.begin(), idx.end(), std::size_t{0});
          std::shuffle(idx.begin(), idx.end(), rng);
          for (std::size_t t = 0; t < support; ++t) {
            int c = nz(rng);
            row[idx[t]] = Rat((rng() & 1) ? c : -c);
          }
        }
        coeffs[g][p] = std::move(row);
      }

    // Every choice of one factor per generator must give a system whose
    // solution set is empty or a single prescribed point; otherwise the
    // common zero set would exceed ps.
    bool good = true;
    std::vector<std::size_t> choice(ngens, 0);
    while (good) {
      std::vector<std::vector<Rat>> aug;
      for (std::size_t g = 0; g < ngens; ++g) {
        const auto& a = coeffs[g][choice[g]];
        const auto& xi = ps.points[choice[g]];
        std::vector<Rat> row(n + 1);
        Rat rhs;
        for (std::size_t j = 0; j < n; ++j) {
          row[j] = a[j];
          rhs += a[j] * xi[j];
        }
        row[n] = rhs;
        aug.push_back(std::move(row));
      }
      Reduction red = reduce(std::move(aug), n);
      if (red.consistent) {
        if (red.rank < n) {
          good = false;
          break;
        }
        bool listed = false;
        for (const auto& pt : ps.points)
          if (pt == red.solution) listed = true;
        if (!listed) {
          good = false;
          break;
        }
      }
      std::size_t pos = ngens;
      for (;;) {
        if (pos == 0) break;
        --pos;
        if (++choice[pos] < npts) break;
        choice[pos] = 0;
      }
      if (pos == 0 && choice[0] == 0) break;
    }
    if (!good) continue;

    std::vector<Poly> gens;
    for (std::size_t g = 0; g < ngens; ++g) {
      Poly prod = Poly::constant(ctx, Rat(1));
      for (std::size_t p = 0; p < npts; ++p) {
        Poly lin = Poly::zero(ctx);
        for (std::size_t j = 0; j < n; ++j) {
          lin += Poly::variable(ctx, j) * coeffs[g][p][j];
          lin -= Poly::constant(ctx, coeffs[g][p][j] * ps.points[p][j]);
        }
        prod *= lin;
      }
      gens.push_back(std::move(prod));
    }
    return Ideal{ctx, std::move(gens)};
  }
  throw nsatz::retry_exhausted(
      "vanishing_generators: no admissible draw after 64 attempts");
}

}  // namespace oracle
