#include "nsatz/resultant.hpp"

#include "nsatz/gcd.hpp"

namespace nsatz {

namespace {

int formal_degree(const Poly& p, std::size_t var, int requested, const char* which) {
  int d = p.degree(var);
  if (d == deg_neg_inf) d = 0;
  if (requested < 0) return d;
  if (requested < d)
    throw domain_error(std::string("formal degree of ") + which +
                       " is below its true degree in the variable");
  return requested;
}

}  // namespace

SylvesterMatrix sylvester(const Poly& f, const Poly& g, std::size_t var, int m, int n) {
  m = formal_degree(f, var, m, "f");
  n = formal_degree(g, var, n, "g");
  if (m + n < 1) throw domain_error("sylvester matrix needs m + n >= 1");
  const std::size_t size = static_cast<std::size_t>(m + n);
  CtxPtr ctx = f.ctx();
  SylvesterMatrix out;
  out.m = m;
  out.n = n;
  out.var = var;
  out.entries.assign(size, std::vector<Poly>(size, Poly::zero(ctx)));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k <= m; ++k)
      out.entries[i][i + k] = f.coeff_of_power(var, static_cast<unsigned>(m - k));
  for (int i = 0; i < m; ++i)
    for (int k = 0; k <= n; ++k)
      out.entries[n + i][i + k] = g.coeff_of_power(var, static_cast<unsigned>(n - k));
  return out;
}

Poly resultant(const Poly& f, const Poly& g, std::size_t var, int m, int n) {
  return det_fraction_free(sylvester(f, g, var, m, n).entries);
}

ResultantResult resultant_with_cofactors(const Poly& f, const Poly& g, std::size_t var,
                                         int m, int n, std::uint64_t op_budget) {
  SylvesterMatrix s = sylvester(f, g, var, m, n);
  const std::size_t size = s.entries.size();
  CtxPtr ctx = f.ctx();
  ResultantResult out;
  out.m = s.m;
  out.n = s.n;

  // The last adjugate row: entry i is +-1 times the minor that drops row i and
  // the last column. Combined with S * (Y^{m+n-1}, ..., Y, 1)^T =
  // (Y^{n-1} f, ..., f, Y^{m-1} g, ..., g)^T it yields v*f + u*g = det(S).
  // The whole row solves S^T z = det(S) * e_last, so one augmented elimination
  // delivers it together with the determinant; the minor-by-minor route stays
  // as the fallback for singular matrices, where the row is still meaningful
  // as a syzygy but the solve cannot reach it.
  std::vector<Poly> adj;
  {
    PolyMat st(size, std::vector<Poly>(size, Poly::zero(ctx)));
    for (std::size_t r = 0; r < size; ++r)
      for (std::size_t c = 0; c < size; ++c) st[c][r] = s.entries[r][c];
    std::vector<Poly> rhs(size, Poly::zero(ctx));
    rhs[size - 1] = Poly::constant(ctx, Rat(1));
    CramerSolve sol = solve_cramer_fraction_free(std::move(st), std::move(rhs), op_budget);
    out.value = sol.det;
    adj = std::move(sol.x);
  }
  if (out.value.is_zero()) {
    auto adjugate_last_row = [&](std::size_t i) -> Poly {
      if (size == 1) return Poly::constant(ctx, Rat(1));
      PolyMat minor;
      minor.reserve(size - 1);
      for (std::size_t r = 0; r < size; ++r) {
        if (r == i) continue;
        std::vector<Poly> row(s.entries[r].begin(), s.entries[r].end() - 1);
        minor.push_back(std::move(row));
      }
      Poly d = det_fraction_free(std::move(minor));
      return ((i + size - 1) % 2 == 0) ? d : -d;
    };
    adj.clear();
    adj.reserve(size);
    for (std::size_t i = 0; i < size; ++i) adj.push_back(adjugate_last_row(i));
  }

  Poly v = Poly::zero(ctx);
  Poly u = Poly::zero(ctx);
  bool any_nonzero = false;
  Exp e(f.nvars(), 0);
  for (std::size_t i = 0; i < size; ++i) {
    Poly a = std::move(adj[i]);
    if (a.is_zero()) continue;
    any_nonzero = true;
    if (i < static_cast<std::size_t>(s.n)) {
      e[var] = static_cast<unsigned>(s.n) - 1 - static_cast<unsigned>(i);
      v += a.mul_term(e, Rat(1));
    } else {
      std::size_t j = i - static_cast<std::size_t>(s.n);
      e[var] = static_cast<unsigned>(s.m) - 1 - static_cast<unsigned>(j);
      u += a.mul_term(e, Rat(1));
    }
    e[var] = 0;
  }

  if (out.value.is_zero() && !any_nonzero) {
    // Vanishing resultant with a zero adjugate row: fall back to the syzygy
    // pair induced by the common factor, when there is one.
    Poly d = gcd_in_var(f, g, var);
    if (d.degree(var) > 0) {
      out.v = *divide_exact(g, d);
      out.u = -*divide_exact(f, d);
      return out;
    }
    throw degenerate_error("vanishing resultant admits no nontrivial cofactor pair");
  }
  out.v = std::move(v);
  out.u = std::move(u);
  return out;
}

}  // namespace nsatz
