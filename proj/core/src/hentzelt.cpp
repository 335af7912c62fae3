#include "nsatz/hentzelt.hpp"

#include <algorithm>

#include "nsatz/errors.hpp"
#include "nsatz/gcd.hpp"

namespace nsatz {

namespace {

constexpr int kMaxRetries = 8;

int poly_cmp(const Poly& a, const Poly& b) {
  GrlexLess less;
  auto ia = a.terms().rbegin(), ea = a.terms().rend();
  auto ib = b.terms().rbegin(), eb = b.terms().rend();
  for (; ia != ea && ib != eb; ++ia, ++ib) {
    if (less(ia->first, ib->first)) return -1;
    if (less(ib->first, ia->first)) return 1;
    if (ia->second != ib->second) return ia->second < ib->second ? -1 : 1;
  }
  if (ib != eb) return -1;
  if (ia != ea) return 1;
  return 0;
}

// Normalized minors, sorted ascending, duplicates and multiples of smaller
// survivors removed. Removing a multiple never loses a common zero: the
// remaining minors already vanish wherever it does.
std::vector<Poly> prune_minors(std::vector<Poly> ps) {
  std::sort(ps.begin(), ps.end(), [](const Poly& a, const Poly& b) {
    if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
    return poly_cmp(a, b) < 0;
  });
  std::vector<Poly> kept;
  for (Poly& p : ps) {
    bool redundant = false;
    for (const Poly& k : kept)
      if (divide_exact(p, k)) {
        redundant = true;
        break;
      }
    if (!redundant) kept.push_back(std::move(p));
  }
  return kept;
}

// All r-element subsets of {0..t-1} in lexicographic order.
bool next_combination(std::vector<std::size_t>& c, std::size_t t) {
  std::size_t r = c.size();
  for (std::size_t i = r; i-- > 0;) {
    if (c[i] + (r - i) < t) {
      ++c[i];
      for (std::size_t j = i + 1; j < r; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

HentzeltChain hentzelt_chain(const Ideal& ideal, std::uint64_t seed) {
  validate_ideal(ideal);
  if (!ideal.ctx || ideal.ctx->size() == 0) throw domain_error("empty variable context");
  if (ideal.gens.empty()) throw domain_error("the zero ideal has no elimination chain");
  const CtxPtr& ctx = ideal.ctx;
  std::size_t n = ctx->size();

  for (int attempt = 0; attempt <= kMaxRetries; ++attempt) {
    HentzeltChain chain;
    chain.input = ideal;
    chain.attempts = attempt;
    chain.gens = ideal.gens;
    if (attempt > 0) {
      LinearChange ch = random_linear_change(n, seed + static_cast<std::uint64_t>(attempt));
      for (Poly& g : chain.gens) g = apply_linear_change(g, ch);
      chain.change = ch;
    }

    bool degenerate = false;
    std::vector<Poly> cur = chain.gens;
    std::optional<HentzeltTerminal> terminal;

    for (std::size_t var = 0; var < n && !terminal && !degenerate; ++var) {
      for (const Poly& g : cur)
        if (g.is_constant() && !g.is_zero()) terminal = HentzeltTerminal::Unit;
      if (terminal) break;
      if (cur.empty()) {
        terminal = HentzeltTerminal::Zero;
        break;
      }

      bool present = false;
      for (const Poly& g : cur) present = present || g.degree(var) > 0;
      if (!present) {
        HentzeltStage stage;
        stage.var = var;
        stage.input_gens = cur;
        stage.pass_through = true;
        stage.minors = cur;
        chain.stages.push_back(std::move(stage));
        continue;
      }

      std::optional<std::size_t> chosen;
      for (std::size_t i = 0; i < cur.size(); ++i)
        if (cur[i].is_regular_in_var_degree(var)) {
          chosen = i;
          break;
        }
      if (!chosen) {
        degenerate = true;
        break;
      }

      HentzeltStage stage;
      stage.var = var;
      stage.input_gens = cur;
      stage.regular_index = *chosen;
      stage.regular_poly = cur[*chosen];
      int r = cur[*chosen].degree(var);
      stage.order = r;

      Poly x = Poly::variable(ctx, var);
      for (std::size_t i = 0; i < cur.size(); ++i) {
        if (i == *chosen) continue;
        Poly shifted = cur[i];
        for (int j = 0; j < r; ++j) {
          PseudoDivision pd = pseudo_divide(shifted, cur[*chosen], var);
          stage.remainder_rows.push_back(pd.rem);
          stage.row_multipliers.push_back(pd.multiplier);
          shifted = shifted * x;
        }
      }

      std::size_t t = stage.remainder_rows.size();
      for (const Poly& row : stage.remainder_rows) {
        std::vector<Poly> entries;
        entries.reserve(static_cast<std::size_t>(r));
        for (int k = 0; k < r; ++k) entries.push_back(row.coeff_of_power(var, static_cast<unsigned>(k)));
        stage.coefficient_matrix.push_back(std::move(entries));
      }

      if (t < static_cast<std::size_t>(r)) {
        chain.stages.push_back(std::move(stage));
        terminal = HentzeltTerminal::Zero;
        break;
      }

      std::vector<Poly> minors;
      std::vector<std::size_t> comb(static_cast<std::size_t>(r));
      for (std::size_t i = 0; i < comb.size(); ++i) comb[i] = i;
      do {
        PolyMat sub;
        for (std::size_t row : comb) sub.push_back(stage.coefficient_matrix[row]);
        Poly det = det_fraction_free(sub);
        if (!det.is_zero()) minors.push_back(normalized_primitive_trailing(det));
      } while (next_combination(comb, t));

      stage.minors = prune_minors(std::move(minors));
      cur = stage.minors;
      chain.stages.push_back(std::move(stage));
      if (cur.empty()) terminal = HentzeltTerminal::Zero;
    }

    if (degenerate) continue;

    if (!terminal) {
      // every variable eliminated; only constants can remain
      bool unit = false;
      for (const Poly& g : cur) {
        if (!g.is_constant()) throw error("internal: non-constant after full elimination");
        if (!g.is_zero()) unit = true;
      }
      terminal = unit ? HentzeltTerminal::Unit : HentzeltTerminal::Zero;
    }
    chain.terminal = *terminal;
    chain.terminal_stage = chain.stages.size();
    return chain;
  }
  throw retry_exhausted("no admissible coordinate change after " +
                        std::to_string(kMaxRetries) + " retries");
}

}  // namespace nsatz
