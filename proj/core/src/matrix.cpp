#include "nsatz/matrix.hpp"

#include <algorithm>

namespace nsatz {

Poly det_fraction_free(PolyMat m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw domain_error("determinant of a non-square matrix");
  if (n == 0) throw domain_error("determinant of an empty matrix");
  CtxPtr ctx = m[0][0].ctx();
  Poly prev = Poly::constant(ctx, Rat(1));
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t pivot = k;
      while (pivot < n && m[pivot][k].is_zero()) ++pivot;
      if (pivot == n) return Poly::zero(ctx);
      std::swap(m[k], m[pivot]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Poly num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        auto q = divide_exact(num, prev);
        if (!q) throw domain_error("fraction-free elimination: inexact division");
        m[i][j] = std::move(*q);
      }
      m[i][k] = Poly::zero(ctx);
    }
    prev = m[k][k];
  }
  Poly det = m[n - 1][n - 1];
  return sign < 0 ? -det : det;
}

CramerSolve solve_cramer_fraction_free(PolyMat a, std::vector<Poly> b,
                                       std::uint64_t op_budget) {
  const std::size_t n = a.size();
  if (n == 0) throw domain_error("cramer solve of an empty system");
  if (b.size() != n) throw domain_error("cramer solve: right-hand side length mismatch");
  for (const auto& row : a)
    if (row.size() != n) throw domain_error("cramer solve of a non-square matrix");
  CtxPtr ctx = a[0][0].ctx();
  for (std::size_t i = 0; i < n; ++i) a[i].push_back(std::move(b[i]));

  std::uint64_t ops = 0;
  auto charge = [&](const Poly& p, const Poly& q) {
    if (op_budget == 0) return;
    ops += static_cast<std::uint64_t>(p.terms().size()) * q.terms().size();
    if (ops > op_budget) throw budget_exceeded("fraction-free elimination over budget");
  };

  Poly prev = Poly::constant(ctx, Rat(1));
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t pivot = k;
      while (pivot < n && a[pivot][k].is_zero()) ++pivot;
      if (pivot == n) return {Poly::zero(ctx), {}};
      std::swap(a[k], a[pivot]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j <= n; ++j) {
        charge(a[k][k], a[i][j]);
        charge(a[i][k], a[k][j]);
        Poly num = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        auto q = divide_exact(num, prev);
        if (!q) throw domain_error("fraction-free elimination: inexact division");
        a[i][j] = std::move(*q);
      }
      a[i][k] = Poly::zero(ctx);
    }
    prev = a[k][k];
  }
  if (a[n - 1][n - 1].is_zero()) return {Poly::zero(ctx), {}};

  CramerSolve out;
  out.det = sign < 0 ? -a[n - 1][n - 1] : a[n - 1][n - 1];
  out.x.assign(n, Poly::zero(ctx));
  out.x[n - 1] = sign < 0 ? -a[n - 1][n] : a[n - 1][n];
  // Triangular system: x_k = (det*c_k - sum_{j>k} U_kj*x_j) / U_kk. The
  // quotient is a polynomial (a signed minor of the augmented matrix), so the
  // division is exact.
  for (std::size_t k = n - 1; k-- > 0;) {
    charge(out.det, a[k][n]);
    Poly num = out.det * a[k][n];
    for (std::size_t j = k + 1; j < n; ++j)
      if (!out.x[j].is_zero() && !a[k][j].is_zero()) {
        charge(a[k][j], out.x[j]);
        num -= a[k][j] * out.x[j];
      }
    auto q = divide_exact(num, a[k][k]);
    if (!q) throw domain_error("fraction-free back substitution: inexact division");
    out.x[k] = std::move(*q);
  }
  return out;
}

namespace {

// Scales a rational row to integers (clears denominators in place).
void clear_denominators(std::vector<Rat>& row) {
  Int l(1);
  for (const auto& x : row)
    if (!x.is_zero()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.den().get_mpz_t());
  if (l == 1) return;
  Rat f{Rat(l)};
  for (auto& x : row) x *= f;
}

}  // namespace

std::size_t rank_exact(RatMat m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  for (auto& row : m) {
    if (row.size() != cols) throw domain_error("ragged matrix");
    clear_denominators(row);
  }
  // Bareiss-style fraction-free elimination over the integer rows.
  Rat prev(1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m[pivot][c].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[r], m[pivot]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j)
        m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
      m[i][c] = Rat(0);
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

std::optional<std::vector<Rat>> solve_exact(RatMat a, std::vector<Rat> b) {
  const std::size_t rows = a.size();
  if (b.size() != rows) throw domain_error("right-hand side length mismatch");
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  for (const auto& row : a)
    if (row.size() != cols) throw domain_error("ragged matrix");
  // Gauss-Jordan with exact rationals; record pivot column per pivot row.
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && a[pivot][c].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[r], a[pivot]);
    std::swap(b[r], b[pivot]);
    Rat inv = a[r][c].inv();
    for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      Rat f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (!b[i].is_zero()) return std::nullopt;
  std::vector<Rat> x(cols, Rat(0));
  for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = b[i];
  return x;
}

RatMat invert_exact(RatMat m) {
  const std::size_t n = m.size();
  RatMat inv(n, std::vector<Rat>(n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw domain_error("inverse of a non-square matrix");
    inv[i][i] = Rat(1);
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && m[pivot][c].is_zero()) ++pivot;
    if (pivot == n) throw domain_error("singular matrix");
    std::swap(m[c], m[pivot]);
    std::swap(inv[c], inv[pivot]);
    Rat f = m[c][c].inv();
    for (std::size_t j = 0; j < n; ++j) {
      m[c][j] *= f;
      inv[c][j] *= f;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m[i][c].is_zero()) continue;
      Rat g = m[i][c];
      for (std::size_t j = 0; j < n; ++j) {
        m[i][j] -= g * m[c][j];
        inv[i][j] -= g * inv[c][j];
      }
    }
  }
  return inv;
}

Rat det_exact(RatMat m) {
  const std::size_t n = m.size();
  Rat det(1);
  for (std::size_t c = 0; c < n; ++c) {
    if (m[c].size() != n) throw domain_error("determinant of a non-square matrix");
    std::size_t pivot = c;
    while (pivot < n && m[pivot][c].is_zero()) ++pivot;
    if (pivot == n) return Rat(0);
    if (pivot != c) {
      std::swap(m[c], m[pivot]);
      det = -det;
    }
    det *= m[c][c];
    Rat f = m[c][c].inv();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i][c].is_zero()) continue;
      Rat g = m[i][c] * f;
      for (std::size_t j = c; j < n; ++j) m[i][j] -= g * m[c][j];
    }
  }
  return det;
}

}  // namespace nsatz
