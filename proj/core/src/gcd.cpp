#include "nsatz/gcd.hpp"

#include <algorithm>

namespace nsatz {

PseudoDivision pseudo_divide(const Poly& a, const Poly& b, std::size_t var) {
  if (b.is_zero()) throw domain_error("pseudo-division by zero");
  int db = b.degree(var);
  if (db <= 0) throw domain_error("pseudo-division needs positive divisor degree in var");
  Poly lc = b.coeff_of_power(var, static_cast<unsigned>(db));
  Poly one = Poly::constant(a.ctx(), Rat(1));
  PseudoDivision out{Poly::zero(a.ctx()), a, one};
  Exp shift(a.nvars(), 0);
  while (!out.rem.is_zero() && out.rem.degree(var) >= db) {
    unsigned dr = static_cast<unsigned>(out.rem.degree(var));
    Poly top = out.rem.coeff_of_power(var, dr);
    shift.assign(a.nvars(), 0);
    shift[var] = dr - static_cast<unsigned>(db);
    Poly t = top.mul_term(shift, Rat(1));
    // multiplier * a = quo * b + rem  stays invariant under:
    out.rem = out.rem * lc - b * t;
    out.quo = out.quo * lc + t;
    out.multiplier = out.multiplier * lc;
  }
  return out;
}

Poly content_in_var(const Poly& a, std::size_t var) {
  Poly g = Poly::zero(a.ctx());
  int d = a.degree(var);
  if (d == deg_neg_inf) return g;
  for (int k = 0; k <= d; ++k) {
    Poly c = a.coeff_of_power(var, static_cast<unsigned>(k));
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_constant()) break;  // content can no longer shrink in variables
  }
  return g;
}

namespace {

// Highest-index variable occurring in a or b, if any.
std::optional<std::size_t> pick_main_var(const Poly& a, const Poly& b) {
  for (std::size_t i = a.nvars(); i-- > 0;) {
    if (a.degree(i) > 0 || b.degree(i) > 0) return i;
  }
  return std::nullopt;
}

// Primitive PRS on var-primitive inputs; returns a var-primitive gcd.
Poly primitive_prs(Poly r0, Poly r1, std::size_t var) {
  if (r0.degree(var) < r1.degree(var)) std::swap(r0, r1);
  while (!r1.is_zero()) {
    if (r1.degree(var) <= 0) return Poly::constant(r0.ctx(), Rat(1));
    Poly rem = pseudo_divide(r0, r1, var).rem;
    if (!rem.is_zero()) {
      Poly c = content_in_var(rem, var);
      rem = *divide_exact(rem, c);
      rem = rem * content(rem).inv();
    }
    r0 = std::move(r1);
    r1 = std::move(rem);
  }
  return r0;
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.is_zero() ? b : normalized_primitive(b) * content(b);
  if (b.is_zero()) return normalized_primitive(a) * content(a);
  Rat cg = rat_content_gcd(content(a), content(b));
  Poly pa = normalized_primitive(a);
  Poly pb = normalized_primitive(b);
  auto var = pick_main_var(pa, pb);
  if (!var) return Poly::constant(a.ctx(), cg);  // both reduced to +-1
  // Split off the content with respect to the main variable, recurse on it.
  Poly ca = content_in_var(pa, *var);
  Poly cb = content_in_var(pb, *var);
  Poly gc = gcd(ca, cb);
  Poly ppa = *divide_exact(pa, ca);
  Poly ppb = *divide_exact(pb, cb);
  Poly g = primitive_prs(std::move(ppa), std::move(ppb), *var);
  g = normalized_primitive(g * gc);
  return g * cg;
}

Poly gcd_many(const std::vector<Poly>& ps) {
  if (ps.empty()) throw domain_error("gcd of an empty list");
  Poly g = Poly::zero(ps.front().ctx());
  for (const auto& p : ps) {
    g = gcd(g, p);
    if (!g.is_zero() && g.is_constant() && content(g).is_one()) break;
  }
  return g;
}

Poly gcd_in_var(const Poly& a, const Poly& b, std::size_t var) {
  Poly g = gcd(a, b);
  if (g.is_zero()) return g;
  if (g.degree(var) <= 0) return Poly::constant(a.ctx(), Rat(1));
  Poly c = content_in_var(g, var);
  return normalized_primitive(*divide_exact(g, c));
}

}  // namespace nsatz
