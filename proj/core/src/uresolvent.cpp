#include "nsatz/uresolvent.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "nsatz/errors.hpp"
#include "nsatz/gcd.hpp"
#include "nsatz/roots.hpp"

namespace nsatz {

namespace {

std::string fresh_name(const std::vector<std::string>& taken, std::string base) {
  while (std::find(taken.begin(), taken.end(), base) != taken.end())
    base.insert(base.begin(), '_');
  return base;
}

}  // namespace

Ideal liouville_substitute(const Ideal& ideal) {
  validate_ideal(ideal);
  if (!ideal.ctx || ideal.ctx->size() == 0) throw domain_error("empty variable context");
  if (ideal.gens.empty()) throw domain_error("the zero ideal has no u-resolvent");
  std::size_t n = ideal.ctx->size();

  std::vector<std::string> taken(ideal.ctx->names().begin() + 1, ideal.ctx->names().end());
  std::string xname = fresh_name(taken, "x");
  taken.push_back(xname);
  std::vector<std::string> unames;
  for (std::size_t i = 1; i <= n; ++i) {
    unames.push_back(fresh_name(taken, "u" + std::to_string(i)));
    taken.push_back(unames.back());
  }
  std::vector<std::string> names;
  names.push_back(xname);
  for (std::size_t i = 1; i < n; ++i) names.push_back(ideal.ctx->name(i));
  for (auto& u : unames) names.push_back(std::move(u));
  CtxPtr ext = make_ctx(std::move(names));

  // x_i keeps its index for i >= 2; u_i sits at n + i - 1.
  Poly lin = Poly::variable(ext, 0);
  for (std::size_t i = 2; i <= n; ++i)
    lin -= Poly::variable(ext, n + i - 1) * Poly::variable(ext, i - 1);
  Poly u1 = Poly::variable(ext, n);

  Ideal out;
  out.ctx = ext;
  for (const Poly& g : ideal.gens) {
    int d = std::max(0, g.degree(0));
    Poly acc = Poly::zero(ext);
    for (int k = 0; k <= d; ++k) {
      Poly c = g.coeff_of_power(0, static_cast<unsigned>(k));
      if (c.is_zero()) continue;
      Poly cm = Poly::zero(ext);
      for (const auto& [e, coef] : c.terms()) {
        Exp ne(2 * n, 0);
        for (std::size_t j = 1; j < n; ++j) ne[j] = e[j];
        cm.add_term(ne, coef);
      }
      acc += cm * lin.pow(static_cast<unsigned>(k)) *
             u1.pow(static_cast<unsigned>(d - k));
    }
    out.gens.push_back(std::move(acc));
  }
  validate_ideal(out);
  return out;
}

UResolvent u_resolvent(const Ideal& ideal, std::uint64_t seed) {
  UResolvent ur;
  ur.input = ideal;
  ur.substituted = liouville_substitute(ideal);
  std::size_t n = ideal.ctx->size();
  const CtxPtr& ext = ur.substituted.ctx;

  ur.x_var = 0;
  for (std::size_t i = 0; i < n; ++i) ur.u_vars.push_back(n + i);

  ChainOptions opt;
  for (std::size_t i = 1; i < n; ++i) opt.elim_vars.push_back(i);
  opt.scalar_vars = ur.u_vars;
  opt.change_block = opt.elim_vars;  // retries never touch x or the u's
  ur.chain = run_elimination_chain(ur.substituted, seed, opt);
  ur.resolvent = ur.chain.complete_resolvent;
  ur.residual = ur.resolvent;

  ur.zero_dimensional = true;
  for (std::size_t i = 1; i < n; ++i)
    if (ur.resolvent.degree(i) > 0) ur.zero_dimensional = false;
  if (!ur.zero_dimensional) {
    ur.notes.push_back("resolvent involves eliminated variables; solution set not finite");
    return ur;
  }

  Poly cont = content_in_var(ur.resolvent, 0);
  auto ppq = divide_exact(ur.resolvent, cont);
  if (!ppq) throw error("internal: content does not divide the resolvent");
  Poly pp = *ppq;
  if (pp.degree(0) <= 0) {
    ur.notes.push_back(ur.resolvent.is_constant()
                           ? "constant resolvent: the system has no solutions"
                           : "resolvent has no x part beyond its content");
    return ur;
  }

  auto specialize = [&](const std::vector<Rat>& uvals) {
    Poly s = pp;
    for (std::size_t j = 0; j < n; ++j)
      s = s.substitute(ur.u_vars[j], Poly::constant(ext, uvals[j]));
    return s;
  };
  auto roots_of = [&](const Poly& s) {
    std::vector<Rat> out;
    for (const auto& r : rational_roots(s, 0)) out.push_back(r.root);
    return out;
  };

  // Candidate i-th coordinates come from the specialization u = e_i; when
  // that vanishes identically, differences against a nonzero base
  // specialization u = e_base + e_i recover a candidate superset.
  std::vector<Poly> unit_spec(n, Poly::zero(ext));
  std::vector<std::vector<Rat>> cand(n);
  std::size_t base = n;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rat> e(n, Rat(0));
    e[i] = Rat(1);
    unit_spec[i] = specialize(e);
    if (!unit_spec[i].is_zero()) {
      cand[i] = roots_of(unit_spec[i]);
      if (base == n) base = i;
    }
  }
  if (base == n) {
    ur.notes.push_back("every unit specialization vanishes; factor extraction abandoned");
    return ur;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!unit_spec[i].is_zero()) continue;
    std::vector<Rat> e(n, Rat(0));
    e[i] = Rat(1);
    e[base] = Rat(1);
    Poly s = specialize(e);
    if (s.is_zero()) {
      ur.notes.push_back("degenerate specialization for coordinate " +
                         ideal.ctx->name(i));
      continue;
    }
    std::set<Rat> diffs;
    for (const Rat& r : roots_of(s))
      for (const Rat& cb : cand[base]) diffs.insert(r - cb);
    cand[i].assign(diffs.begin(), diffs.end());
  }

  // Random u-vectors prune the cartesian assembly: a true factor evaluates
  // to a root of the corresponding specialization.
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  std::vector<std::vector<Rat>> fvecs;
  std::vector<std::set<Rat>> froots;
  for (int t = 0; t < 2; ++t) {
    std::vector<Rat> vec;
    for (std::size_t j = 0; j < n; ++j)
      vec.push_back(Rat(Int(1 + static_cast<long>(rng() % 7))));
    Poly s = specialize(vec);
    if (s.is_zero()) continue;
    std::set<Rat> rs;
    for (const Rat& r : roots_of(s)) rs.insert(r);
    fvecs.push_back(std::move(vec));
    froots.push_back(std::move(rs));
  }

  unsigned long long combos = 1;
  for (std::size_t i = 0; i < n; ++i) {
    combos *= cand[i].size();
    if (combos > (1ull << 16)) {
      ur.notes.push_back("candidate assembly too large; factor extraction abandoned");
      return ur;
    }
  }
  if (combos == 0) return ur;

  Poly work = pp;
  std::vector<std::size_t> idx(n, 0);
  bool done = false;
  while (!done) {
    std::vector<Rat> xi;
    xi.reserve(n);
    for (std::size_t i = 0; i < n; ++i) xi.push_back(cand[i][idx[i]]);

    bool plausible = true;
    for (std::size_t t = 0; t < fvecs.size() && plausible; ++t) {
      Rat s(0);
      for (std::size_t j = 0; j < n; ++j) s = s + xi[j] * fvecs[t][j];
      plausible = froots[t].count(s) > 0;
    }
    if (plausible) {
      bool vanishes = true;
      for (const Poly& g : ideal.gens)
        if (!g.eval(xi).is_zero()) {
          vanishes = false;
          break;
        }
      if (vanishes) {
        Poly lf = Poly::variable(ext, 0);
        for (std::size_t j = 0; j < n; ++j)
          lf -= Poly::constant(ext, xi[j]) * Poly::variable(ext, ur.u_vars[j]);
        int mult = 0;
        while (auto q = divide_exact(work, lf)) {
          work = *q;
          ++mult;
        }
        if (mult > 0)
          ur.factors.push_back({xi, mult});
        else
          ur.notes.push_back("verified zero without a linear factor in the resolvent");
      }
    }

    std::size_t pos = n;
    for (;;) {
      if (pos == 0) {
        done = true;
        break;
      }
      --pos;
      if (++idx[pos] < cand[pos].size()) break;
      idx[pos] = 0;
    }
  }

  ur.residual = cont * work;
  std::sort(ur.factors.begin(), ur.factors.end(),
            [](const TrueLinearFactor& a, const TrueLinearFactor& b) { return a.xi < b.xi; });
  return ur;
}

std::vector<SolutionPoint> extract_points(const UResolvent& ur) {
  std::vector<SolutionPoint> pts;
  pts.reserve(ur.factors.size());
  for (const auto& f : ur.factors) pts.push_back({f.xi});
  return pts;
}

}  // namespace nsatz
