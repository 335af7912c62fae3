#include "nsatz/nullsatz.hpp"

#include <algorithm>
#include <map>

#include "nsatz/errors.hpp"
#include "nsatz/matrix.hpp"

namespace nsatz {

namespace {

void monomials_of_degree(std::size_t n, Exp& cur, std::size_t pos, int left,
                         std::vector<Exp>& out) {
  if (pos + 1 == n) {
    cur[pos] = static_cast<unsigned>(left);
    out.push_back(cur);
    cur[pos] = 0;
    return;
  }
  for (int k = 0; k <= left; ++k) {
    cur[pos] = static_cast<unsigned>(k);
    monomials_of_degree(n, cur, pos + 1, left - k, out);
  }
  cur[pos] = 0;
}

std::vector<Exp> degree_basis(std::size_t n, int d) {
  std::vector<Exp> out;
  Exp cur(n, 0);
  monomials_of_degree(n, cur, 0, d, out);
  std::sort(out.begin(), out.end(), GrlexLess{});
  return out;
}

}  // namespace

int hilbert_function(const Ideal& ideal, int nu) {
  validate_ideal(ideal);
  if (!ideal.ctx || ideal.ctx->size() == 0) throw domain_error("empty variable context");
  for (const Poly& g : ideal.gens) {
    unsigned d = exp_total(g.lead_exp());
    for (const auto& [e, c] : g.terms())
      if (exp_total(e) != d) throw domain_error("non-homogeneous generator");
  }
  if (nu < 0) return 0;
  std::size_t n = ideal.ctx->size();

  std::vector<Exp> basis = degree_basis(n, nu);
  std::map<Exp, std::size_t, GrlexLess> col_of;
  for (std::size_t j = 0; j < basis.size(); ++j) col_of.emplace(basis[j], j);

  RatMat rows;
  for (const Poly& g : ideal.gens) {
    int d = g.total_degree();
    if (d > nu) continue;
    for (const Exp& m : degree_basis(n, nu - d)) {
      std::vector<Rat> row(basis.size(), Rat(0));
      for (const auto& [e, c] : g.terms()) {
        Exp prod = e;
        for (std::size_t i = 0; i < n; ++i) prod[i] += m[i];
        row[col_of.at(prod)] = c;
      }
      rows.push_back(std::move(row));
    }
  }
  return static_cast<int>(basis.size()) - static_cast<int>(rank_exact(rows));
}

}  // namespace nsatz
