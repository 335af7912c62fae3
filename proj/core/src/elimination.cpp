#include "nsatz/elimination.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <utility>

#include "nsatz/errors.hpp"
#include "nsatz/gcd.hpp"
#include "nsatz/resultant.hpp"
#include "nsatz/roots.hpp"

namespace nsatz {

namespace {

// Cap on the term-pair work of one budgeted device attempt inside a chain.
// Far above what a healthy sparse stage needs, small enough that an attempt
// that is blowing up gets abandoned in a fraction of a second.
constexpr std::uint64_t kOpBudget = 60'000'000;

// Total order on polynomials: graded-lex on terms, coefficients as tiebreak.
// Used to sort stage outputs deterministically regardless of input order.
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

// The stage resultant picks up a power of the chosen generator's leading
// coefficient in `var`. That factor must not vanish under any specialization
// of the surviving variables, so the whole top coefficient has to be free of
// them; only masked scalar variables may appear in it.
bool regular_witness(const Poly& p, std::size_t var, const std::vector<char>& scalar) {
  int d = p.degree(var);
  if (d < 1) return false;
  for (const auto& [e, c] : p.terms()) {
    if (e[var] != static_cast<unsigned>(d)) continue;
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (j == var || e[j] == 0) continue;
      if (j >= scalar.size() || !scalar[j]) return false;
    }
  }
  return true;
}

std::string fresh_name(const std::vector<std::string>& taken, std::string base) {
  while (std::find(taken.begin(), taken.end(), base) != taken.end())
    base.insert(base.begin(), '_');
  return base;
}

std::string monomial_str(const VarCtx& ctx, const Exp& e, std::size_t from) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = from; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!first) out << "*";
    out << ctx.name(i);
    if (e[i] > 1) out << "^" << e[i];
    first = false;
  }
  return first ? "1" : out.str();
}

// Groups the terms of p, which lives in an extension of `base`, by the
// exponents of the trailing auxiliary variables.
std::map<Exp, Poly, GrlexLess> split_by_aux(const Poly& p, const CtxPtr& base) {
  std::size_t bn = base->size();
  std::map<Exp, Poly, GrlexLess> groups;
  for (const auto& [e, c] : p.terms()) {
    Exp aux(e.begin() + static_cast<std::ptrdiff_t>(bn), e.end());
    Exp be(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(bn));
    auto it = groups.find(aux);
    if (it == groups.end()) it = groups.emplace(aux, Poly::zero(base)).first;
    it->second.add_term(be, c);
  }
  return groups;
}

std::vector<std::vector<Poly>> identity_rows(const CtxPtr& ctx, std::size_t k) {
  std::vector<std::vector<Poly>> rows(k, std::vector<Poly>(k, Poly::zero(ctx)));
  for (std::size_t i = 0; i < k; ++i) rows[i][i] = Poly::constant(ctx, Rat(1));
  return rows;
}

struct Reduced {
  std::vector<Poly> gens;
  std::vector<std::vector<Poly>> cofactors;
};

// Stage hygiene: strip integer content (scaling the cofactor row in step),
// fix the leading sign, drop duplicates and multiples of other survivors.
// Everything removed is a combination of what stays, so the generated ideal
// and all later gcds are untouched.
Reduced reduce_generators(const std::vector<Poly>& gens,
                          const std::vector<std::vector<Poly>>& rows) {
  struct Item {
    Poly g;
    std::vector<Poly> row;
  };
  std::vector<Item> items;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (gens[k].is_zero()) continue;
    Rat c = content(gens[k]);
    if (gens[k].lead_coeff().sign() < 0) c = -c;
    Rat s = c.inv();
    Item item{gens[k] * s, rows[k]};
    for (Poly& a : item.row) a = a * s;
    items.push_back(std::move(item));
  }
  std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
    if (a.g.total_degree() != b.g.total_degree())
      return a.g.total_degree() < b.g.total_degree();
    return poly_cmp(a.g, b.g) < 0;
  });
  Reduced out;
  for (auto& item : items) {
    bool redundant = false;
    for (const Poly& kept : out.gens)
      if (divide_exact(item.g, kept)) {
        redundant = true;
        break;
      }
    if (!redundant) {
      out.gens.push_back(std::move(item.g));
      out.cofactors.push_back(std::move(item.row));
    }
  }
  return out;
}

EliminationStep step_impl(const std::vector<Poly>& gens, std::size_t var,
                          const std::vector<char>& scalar, bool require_regular,
                          std::size_t combo_cap = 0, std::uint64_t combo_seed = 0) {
  if (gens.empty()) throw domain_error("elimination step needs at least one generator");
  const CtxPtr& ctx = gens.front().ctx();
  if (!ctx || var >= ctx->size()) throw domain_error("stage variable out of range");
  bool present = false;
  for (const Poly& g : gens) {
    if (g.is_zero()) throw domain_error("zero generator in elimination step");
    present = present || g.degree(var) > 0;
  }
  if (!present) throw degenerate_error("no generator contains the stage variable");

  EliminationStep base;
  base.var = var;
  base.input_gens = gens;
  base.D = normalized_primitive(gcd_many(gens));
  for (const Poly& f : gens) {
    auto q = divide_exact(f, base.D);
    if (!q) throw error("internal: stage gcd does not divide a generator");
    base.phis.push_back(std::move(*q));
  }

  std::vector<std::size_t> with_var;
  for (std::size_t i = 0; i < base.phis.size(); ++i)
    if (base.phis[i].degree(var) > 0) with_var.push_back(i);

  if (with_var.empty()) {
    base.trivial = true;
    base.next_gens = base.phis;
    base.cofactors = identity_rows(ctx, base.phis.size());
    base.aux_monomials.assign(base.phis.size(), "1");
    Reduced red = reduce_generators(base.next_gens, base.cofactors);
    base.kept_gens = std::move(red.gens);
    base.kept_cofactors = std::move(red.cofactors);
    return base;
  }

  // The device phase on a working basis, either the phis themselves or random
  // combinations of them; mix holds the combination coefficients (empty means
  // work == phis) and the cofactor rows come out against the phis either way.
  // A positive op_budget bounds the elimination work inside the device and a
  // budget_exceeded escapes to the attempt driver below the lambda.
  auto run_device = [&](const std::vector<Poly>& work,
                        const std::vector<std::vector<Rat>>& mix,
                        std::uint64_t op_budget) -> EliminationStep {
    EliminationStep step = base;

    // Among the admissible generators prefer the lowest degree in the stage
    // variable: the device's Sylvester matrix has order m + n and reducing the
    // combination modulo the chosen generator caps n below m.
    for (std::size_t i = 0; i < work.size(); ++i)
      if (work[i].degree(var) > 0 && regular_witness(work[i], var, scalar)) {
        if (!step.shortcut_index ||
            work[i].degree(var) < work[*step.shortcut_index].degree(var))
          step.shortcut_index = i;
      }
    if (!step.shortcut_index && require_regular)
      throw degenerate_error("no generator is regular in its degree in the stage variable");

    std::size_t m = work.size();
    std::vector<std::string> names = ctx->names();
    std::size_t bn = names.size();
    std::vector<std::size_t> u_pos(m, 0), v_pos(m, 0);
    bool full_device = !step.shortcut_index.has_value();
    if (full_device) {
      for (std::size_t i = 0; i < m; ++i) {
        names.push_back(fresh_name(names, "u" + std::to_string(i + 1)));
        u_pos[i] = names.size() - 1;
      }
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (!full_device && i == *step.shortcut_index) continue;
      names.push_back(fresh_name(names, "v" + std::to_string(i + 1)));
      v_pos[i] = names.size() - 1;
    }
    CtxPtr ext = make_ctx(std::move(names));
    step.device_ctx = ext;

    std::vector<Poly> lifted;
    for (const Poly& p : work) lifted.push_back(p.lifted(ext));

    Poly first = Poly::zero(ext);
    Poly second = Poly::zero(ext);
    // Quotients and constant multipliers from reducing the other generators
    // modulo the regular one. Replacing phi_i by its remainder scales each
    // auxiliary coefficient of the resultant by a nonzero constant and keeps
    // the Sylvester matrix at the order of the regular generator, while the
    // quotients restore exact cofactor rows below.
    std::vector<Poly> red_q;
    std::vector<Rat> red_scale;
    if (full_device) {
      for (std::size_t i = 0; i < m; ++i) {
        first += Poly::variable(ext, u_pos[i]) * lifted[i];
        second += Poly::variable(ext, v_pos[i]) * lifted[i];
      }
    } else {
      std::size_t j = *step.shortcut_index;
      first = lifted[j];
      red_q.assign(m, Poly::zero(ext));
      red_scale.assign(m, Rat(1));
      for (std::size_t i = 0; i < m; ++i) {
        if (i == j) continue;
        Poly tau = lifted[i];
        if (work[i].degree(var) >= work[j].degree(var)) {
          PseudoDivision pd = pseudo_divide(work[i], work[j], var);
          if (pd.multiplier.is_constant()) {
            tau = pd.rem.lifted(ext);
            red_q[i] = pd.quo.lifted(ext);
            red_scale[i] = pd.multiplier.lead_coeff();
          }
        }
        second += Poly::variable(ext, v_pos[i]) * tau;
      }
    }
    if (second.is_zero()) throw degenerate_error("stage has a single effective generator");

    ResultantResult rr = resultant_with_cofactors(first, second, var, -1, -1, op_budget);
    if (rr.value.is_zero()) {
      // Legal for a single step (the variable eliminates to the zero ideal);
      // the chain driver restarts with a coordinate change instead.
      if (require_regular) throw degenerate_error("vanishing stage resultant");
      step.device_det = rr.value;
      return step;
    }
    step.device_det = rr.value;

    // first*v + second*u = value, so the coefficient of an auxiliary monomial
    // in  v*u_i + u*v_i  is the cofactor of phi_i in that monomial's next
    // generator. In the shortcut the combination holds the remainders
    // mult_i*phi_i - q_i*phi_j, so phi_i enters through u*v_i*mult_i and the
    // quotient term -u*v_i*q_i is charged back to the regular phi_j.
    std::vector<Poly> witness(m, Poly::zero(ext));
    if (full_device) {
      for (std::size_t i = 0; i < m; ++i)
        witness[i] = rr.v * Poly::variable(ext, u_pos[i]) + rr.u * Poly::variable(ext, v_pos[i]);
    } else {
      std::size_t j = *step.shortcut_index;
      witness[j] = rr.v;
      for (std::size_t i = 0; i < m; ++i) {
        if (i == j) continue;
        Poly vi = Poly::variable(ext, v_pos[i]);
        witness[i] = rr.u * vi * red_scale[i];
        if (!red_q[i].is_zero()) witness[j] -= rr.u * vi * red_q[i];
      }
    }

    auto groups = split_by_aux(rr.value, ctx);
    std::vector<std::map<Exp, Poly, GrlexLess>> wsplit;
    wsplit.reserve(m);
    for (const Poly& w : witness) wsplit.push_back(split_by_aux(w, ctx));

    for (const auto& [aux, coef] : groups) {
      if (coef.is_zero()) continue;
      step.next_gens.push_back(coef);
      Exp full(ext->size(), 0);
      std::copy(aux.begin(), aux.end(), full.begin() + static_cast<std::ptrdiff_t>(bn));
      step.aux_monomials.push_back(monomial_str(*ext, full, bn));
      std::vector<Poly> row;
      row.reserve(m);
      for (std::size_t i = 0; i < m; ++i) {
        auto it = wsplit[i].find(aux);
        row.push_back(it == wsplit[i].end() ? Poly::zero(ctx) : it->second);
      }
      if (!mix.empty()) {
        std::vector<Poly> phi_row(step.phis.size(), Poly::zero(ctx));
        for (std::size_t t = 0; t < row.size(); ++t) {
          if (row[t].is_zero()) continue;
          for (std::size_t j = 0; j < phi_row.size(); ++j)
            if (!mix[t][j].is_zero()) phi_row[j] += row[t] * mix[t][j];
        }
        row = std::move(phi_row);
      }
      step.cofactors.push_back(std::move(row));
    }
    Reduced red = reduce_generators(step.next_gens, step.cofactors);
    step.kept_gens = std::move(red.gens);
    step.kept_cofactors = std::move(red.cofactors);
    return step;
  };

  // Every auxiliary indeterminate of the device multiplies the monomial count
  // of the stage resultant, so a long generator list can be ruinous. Over a
  // coordinate space of dimension k, any k + 1 generic combinations of the
  // generators cut the same zero set (each further generic combination drops
  // the dimension of the excess locus), and the mixing matrix turns the
  // device's rows back into rows against the phis. Sparse bases often keep
  // the exact device small regardless of their length, so the basis itself
  // goes first under an operation budget and the seeded combinations only
  // replace it when that attempt blows up. A bare step (combo_cap zero) runs
  // the exact device unconditionally.
  bool can_combine = combo_cap > 1 && base.phis.size() > combo_cap;
  if (!can_combine) return run_device(base.phis, {}, 0);
  try {
    return run_device(base.phis, {}, kOpBudget);
  } catch (const budget_exceeded&) {
  }
  std::mt19937_64 rng(combo_seed);
  std::uniform_int_distribution<long> coef(1, 1L << 20);
  std::vector<Poly> work(combo_cap, Poly::zero(ctx));
  std::vector<std::vector<Rat>> mix(combo_cap,
                                    std::vector<Rat>(base.phis.size(), Rat(0)));
  for (std::size_t t = 0; t < combo_cap; ++t) {
    for (std::size_t j = 0; j < base.phis.size(); ++j) {
      long c = coef(rng);
      if (rng() & 1) c = -c;
      mix[t][j] = Rat(c);
      work[t] += base.phis[j] * mix[t][j];
    }
    if (work[t].is_zero()) throw degenerate_error("generator combination vanished");
  }
  bool any = false;
  for (const Poly& w : work) any = any || w.degree(var) > 0;
  if (!any) throw degenerate_error("generator combinations lost the stage variable");
  try {
    return run_device(work, mix, kOpBudget);
  } catch (const budget_exceeded&) {
    throw degenerate_error("stage device exceeded its computation budget");
  }
}

EliminationStep pass_through_step(const std::vector<Poly>& gens, const CtxPtr& ctx,
                                  std::size_t var) {
  EliminationStep step;
  step.var = var;
  step.input_gens = gens;
  step.D = Poly::constant(ctx, Rat(1));
  step.phis = gens;
  step.next_gens = gens;
  step.aux_monomials.assign(gens.size(), "1");
  step.cofactors = identity_rows(ctx, gens.size());
  step.pass_through = true;
  step.kept_gens = gens;
  step.kept_cofactors = step.cofactors;
  return step;
}

}  // namespace

EliminationStep kronecker_step(const std::vector<Poly>& gens, std::size_t var) {
  return step_impl(gens, var, {}, false);
}

ResolventChain run_elimination_chain(const Ideal& ideal, std::uint64_t seed,
                                     const ChainOptions& options) {
  validate_ideal(ideal);
  if (ideal.gens.empty()) throw domain_error("the zero ideal has no resolvent");
  const CtxPtr& ctx = ideal.ctx;
  std::size_t n = ctx->size();

  std::vector<char> in_elim(n, 0);
  for (std::size_t v : options.elim_vars) {
    if (v >= n) throw domain_error("elimination variable out of range");
    if (in_elim[v]) throw domain_error("duplicate elimination variable");
    in_elim[v] = 1;
  }
  std::vector<char> scalar(n, 0);
  for (std::size_t v : options.scalar_vars) {
    if (v >= n) throw domain_error("scalar variable out of range");
    scalar[v] = 1;
  }
  std::vector<std::size_t> block = options.change_block;
  if (block.empty()) {
    block.resize(n);
    std::iota(block.begin(), block.end(), std::size_t{0});
  }

  int cap = std::max(0, options.max_retries);
  for (int attempt = 0; attempt <= cap; ++attempt) {
    ResolventChain chain;
    chain.input = ideal;
    chain.elim_vars = options.elim_vars;
    chain.attempts = attempt;
    chain.gens = ideal.gens;
    if (attempt > 0) {
      LinearChange ch =
          random_linear_change_block(n, seed + static_cast<std::uint64_t>(attempt), block);
      for (Poly& g : chain.gens) g = apply_linear_change(g, ch);
      chain.change = ch;
    }
    try {
      std::vector<Poly> cur = chain.gens;
      for (std::size_t si = 0; si < options.elim_vars.size(); ++si) {
        std::size_t var = options.elim_vars[si];
        bool present = false;
        for (const Poly& g : cur) present = present || g.degree(var) > 0;
        // si variables are gone, so the stage variety lives in n - si
        // coordinates and n - si + 1 generic combinations suffice for it.
        std::size_t combo_cap = n - si + 1;
        std::uint64_t combo_seed =
            seed ^ (0x9e3779b97f4a7c15ULL *
                    (static_cast<std::uint64_t>(attempt) * 131 + si + 1));
        EliminationStep step = present
                                   ? step_impl(cur, var, scalar, true, combo_cap, combo_seed)
                                   : pass_through_step(cur, ctx, var);
        if (step.kept_gens.empty()) throw degenerate_error("stage kept no generators");
        chain.partial_resolvents.push_back(step.D);
        cur = step.kept_gens;
        chain.steps.push_back(std::move(step));
        // A constant generator makes every remaining stage trivial (unit
        // ideal from here on, all further partial resolvents 1); stop early.
        bool unit = false;
        for (const Poly& g : cur) unit = unit || g.is_constant();
        if (unit) break;
      }
      chain.final_gens = cur;
      Poly dlast = normalized_primitive(gcd_many(cur));
      chain.partial_resolvents.push_back(dlast);
      Poly complete = Poly::constant(ctx, Rat(1));
      for (const Poly& d : chain.partial_resolvents) complete *= d;
      chain.complete_resolvent = complete;

      // Cofactors of the complete resolvent: express dlast in the final
      // generators, then compose backwards through the kept cofactor rows
      // (each stage's rows are taken against its D-stripped basis, which is
      // exactly what multiplies the accumulated product of stage gcds in).
      auto compose_back = [&](std::vector<Poly> b) {
        for (auto it = chain.steps.rbegin(); it != chain.steps.rend(); ++it) {
          const auto& rows = it->kept_cofactors;
          std::vector<Poly> nb(it->input_gens.size(), Poly::zero(ctx));
          for (std::size_t mu = 0; mu < rows.size(); ++mu) {
            if (b[mu].is_zero()) continue;
            for (std::size_t j = 0; j < nb.size(); ++j)
              if (!rows[mu][j].is_zero()) nb[j] += b[mu] * rows[mu][j];
          }
          b = std::move(nb);
        }
        chain.resolvent_cofactors = std::move(b);
      };

      std::size_t cidx = cur.size();
      for (std::size_t i = 0; i < cur.size() && cidx == cur.size(); ++i)
        if (cur[i].is_constant()) cidx = i;
      if (cidx < cur.size()) {
        std::vector<Poly> b(cur.size(), Poly::zero(ctx));
        b[cidx] = Poly::constant(ctx, dlast.lead_coeff() / cur[cidx].lead_coeff());
        compose_back(std::move(b));
        return chain;
      }

      std::vector<char> used(n, 0);
      for (const Poly& f : cur)
        for (const auto& [e, c] : f.terms())
          for (std::size_t j = 0; j < n; ++j)
            if (e[j]) used[j] = 1;
      std::size_t nused = 0, uvar = n;
      for (std::size_t j = 0; j < n; ++j)
        if (used[j]) {
          ++nused;
          uvar = j;
        }
      if (nused <= 1) {
        if (nused == 0) {
          uvar = 0;
          for (std::size_t j = 0; j < n; ++j)
            if (!in_elim[j]) {
              uvar = j;
              break;
            }
        }
        UnivariateExtGcd eg = extended_gcd_univariate(cur, uvar);
        if (!(eg.g == dlast)) throw error("internal: final-stage gcd mismatch");
        compose_back(eg.cofactors);
      }
      return chain;
    } catch (const degenerate_error&) {
      continue;
    }
  }
  throw retry_exhausted("no admissible coordinate change after " + std::to_string(cap) +
                        " retries");
}

ResolventChain kronecker_resolvent(const Ideal& ideal, std::uint64_t seed) {
  if (!ideal.ctx || ideal.ctx->size() == 0) throw domain_error("empty variable context");
  ChainOptions opt;
  for (std::size_t i = 0; i + 1 < ideal.ctx->size(); ++i) opt.elim_vars.push_back(i);
  return run_elimination_chain(ideal, seed, opt);
}

BackSubstitution back_substitute(const ResolventChain& chain, const Ideal& ideal) {
  validate_ideal(ideal);
  const CtxPtr& ctx = chain.input.ctx;
  if (!ctx) throw domain_error("chain without variable context");
  std::size_t n = ctx->size();
  std::vector<char> elim(n, 0);
  for (std::size_t v : chain.elim_vars) elim[v] = 1;
  std::size_t last = n, rest = 0;
  for (std::size_t j = 0; j < n; ++j)
    if (!elim[j]) {
      ++rest;
      last = j;
    }
  if (rest != 1) throw domain_error("back substitution needs exactly one remaining variable");

  BackSubstitution out;
  const Poly& dlast = chain.partial_resolvents.back();
  if (dlast.is_constant()) {
    if (!chain.complete_resolvent.is_constant()) {
      out.complete = false;
      out.notes.push_back(
          "final stage is constant while the complete resolvent is not; "
          "solutions lie on lower-stage components");
    }
    return out;
  }

  struct Branch {
    std::vector<std::optional<Rat>> coords;
  };
  std::vector<Branch> branches;
  {
    auto roots = rational_roots(dlast, last);
    int found = 0;
    for (const auto& r : roots) found += r.multiplicity;
    if (found < dlast.degree(last)) {
      out.complete = false;
      out.notes.push_back("irrational factor remains in the final stage: " + dlast.str());
    }
    for (const auto& r : roots) {
      Branch b;
      b.coords.assign(n, std::nullopt);
      b.coords[last] = r.root;
      branches.push_back(std::move(b));
    }
  }

  for (auto it = chain.steps.rbegin(); it != chain.steps.rend(); ++it) {
    std::size_t var = it->var;
    std::vector<Branch> next;
    for (const Branch& br : branches) {
      std::vector<Poly> specs;
      bool all_zero = true;
      for (const Poly& g : it->input_gens) {
        Poly s = g;
        for (std::size_t j = 0; j < n; ++j)
          if (br.coords[j]) s = s.substitute(j, Poly::constant(ctx, *br.coords[j]));
        if (!s.is_zero()) {
          all_zero = false;
          specs.push_back(std::move(s));
        }
      }
      if (all_zero) {
        out.complete = false;
        out.notes.push_back("variable " + ctx->name(var) +
                            " is unconstrained over a partial solution");
        continue;
      }
      Poly g = normalized_primitive(gcd_many(specs));
      if (g.is_constant()) continue;
      auto roots = rational_roots(g, var);
      int found = 0;
      for (const auto& r : roots) found += r.multiplicity;
      if (found < g.degree(var)) {
        out.complete = false;
        out.notes.push_back("irrational factor remains at stage " + ctx->name(var) + ": " +
                            g.str());
      }
      for (const auto& r : roots) {
        Branch nb = br;
        nb.coords[var] = r.root;
        next.push_back(std::move(nb));
      }
    }
    branches = std::move(next);
  }

  std::set<std::vector<Rat>> points;
  for (const Branch& br : branches) {
    std::vector<Rat> eta;
    eta.reserve(n);
    bool full = true;
    for (std::size_t j = 0; j < n && full; ++j) {
      if (br.coords[j])
        eta.push_back(*br.coords[j]);
      else
        full = false;
    }
    if (!full) continue;
    std::vector<Rat> xi = chain.change ? map_point(*chain.change, eta) : eta;
    bool vanishes = true;
    for (const Poly& g : ideal.gens)
      if (!g.eval(xi).is_zero()) {
        vanishes = false;
        break;
      }
    if (vanishes) points.insert(std::move(xi));
  }
  for (const auto& p : points) out.points.push_back({p});
  return out;
}

}  // namespace nsatz
