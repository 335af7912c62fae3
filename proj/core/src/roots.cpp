#include "nsatz/roots.hpp"

#include <algorithm>
#include <map>

namespace nsatz {

namespace {

void check_univariate(const Poly& p, std::size_t var) {
  for (const auto& [e, c] : p.terms())
    for (std::size_t i = 0; i < e.size(); ++i)
      if (i != var && e[i] != 0)
        throw domain_error("polynomial is not univariate in the requested variable");
}

// --- exact integer factorization (trial division + Brent's rho) ---

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

Int pollard_rho(const Int& n) {
  // Deterministic Brent variant; n is odd, composite, and not a prime power
  // small enough for trial division.
  for (unsigned long c = 1;; ++c) {
    Int x(2), y(2), d(1);
    Int diff;
    while (d == 1) {
      // x = x^2 + c mod n (twice for y)
      x = (x * x + c) % n;
      y = (y * y + c) % n;
      y = (y * y + c) % n;
      diff = abs_int(x - y);
      if (diff == 0) break;
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != 0 && d != 1 && d != n) return d;
  }
}

void factor_into(const Int& n, std::map<Int, unsigned>& out) {
  Int m = n;
  if (m <= 1) return;
  for (unsigned long p = 2; p < (1ul << 20) && Int(p) * Int(p) <= m; p += (p == 2 ? 1 : 2)) {
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      ++out[Int(static_cast<long>(p))];
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
    }
  }
  if (m == 1) return;
  if (mpz_probab_prime_p(m.get_mpz_t(), 40)) {
    ++out[m];
    return;
  }
  Int d = pollard_rho(m);
  factor_into(d, out);
  factor_into(Int(m / d), out);
}

std::vector<Int> divisors(const Int& n) {
  std::map<Int, unsigned> f;
  factor_into(abs_int(n), f);
  std::vector<Int> out{Int(1)};
  for (const auto& [p, e] : f) {
    std::size_t sz = out.size();
    Int pk(1);
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < sz; ++i) out.push_back(Int(out[i] * pk));
    }
  }
  return out;
}

// Univariate helpers on dense coefficient vectors (ascending powers).
std::vector<Rat> to_dense(const Poly& p, std::size_t var) {
  int d = p.degree(var);
  std::vector<Rat> out(static_cast<std::size_t>(std::max(d, 0)) + 1, Rat(0));
  for (const auto& [e, c] : p.terms()) out[e[var]] = c;
  return out;
}

}  // namespace

std::vector<RootMult> rational_roots(const Poly& p, std::size_t var) {
  if (p.is_zero()) throw domain_error("roots of the zero polynomial");
  check_univariate(p, var);
  std::vector<RootMult> out;
  if (p.is_constant()) return out;

  std::vector<Rat> c = to_dense(normalized_primitive(p), var);
  // Factor out x^k.
  std::size_t low = 0;
  while (c[low].is_zero()) ++low;
  if (low > 0) {
    out.push_back({Rat(0), static_cast<int>(low)});
    c.erase(c.begin(), c.begin() + static_cast<long>(low));
  }
  if (c.size() <= 1) return out;

  // Integer coefficients after normalized_primitive (content 1).
  const Int a0 = c.front().num();
  const Int ad = c.back().num();
  auto eval_at = [&](const Rat& x) {
    Rat acc(0);
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
    return acc;
  };
  auto deflate = [&](const Rat& x) {
    // Synthetic division by (t - x); assumes x is a root.
    std::vector<Rat> q(c.size() - 1, Rat(0));
    Rat carry(0);
    for (std::size_t i = c.size(); i-- > 1;) {
      carry = c[i] + carry * x;
      q[i - 1] = carry;
    }
    c = std::move(q);
  };

  std::vector<Int> rs = divisors(a0);
  std::vector<Int> ss = divisors(ad);
  for (const Int& r : rs) {
    for (const Int& s : ss) {
      Int g;
      mpz_gcd(g.get_mpz_t(), r.get_mpz_t(), s.get_mpz_t());
      if (g != 1) continue;
      for (int sign = 1; sign >= -1; sign -= 2) {
        Rat x(sign > 0 ? r : Int(-r), s);
        int mult = 0;
        while (c.size() > 1 && eval_at(x).is_zero()) {
          deflate(x);
          ++mult;
        }
        if (mult > 0) out.push_back({x, mult});
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const RootMult& a, const RootMult& b) { return a.root < b.root; });
  return out;
}

UnivariateExtGcd extended_gcd_univariate(const std::vector<Poly>& ps, std::size_t var) {
  if (ps.empty()) throw domain_error("extended gcd of an empty list");
  CtxPtr ctx = ps.front().ctx();
  for (const auto& p : ps) {
    if (p.is_zero()) throw domain_error("extended gcd with a zero polynomial");
    check_univariate(p, var);
  }

  auto divmod = [&](const Poly& a, const Poly& b) {
    // Plain division over Q in one variable.
    Poly q = Poly::zero(ctx);
    Poly r = a;
    int db = b.degree(var);
    Rat lb = b.coeff_of_power(var, static_cast<unsigned>(std::max(db, 0))).constant_value();
    Exp e(ctx->size(), 0);
    while (!r.is_zero() && r.degree(var) >= db) {
      unsigned dr = static_cast<unsigned>(r.degree(var));
      Rat lr = r.coeff_of_power(var, dr).constant_value();
      e[var] = dr - static_cast<unsigned>(db);
      Poly t = Poly::term(ctx, e, lr / lb);
      q += t;
      r -= t * b;
    }
    return std::pair<Poly, Poly>(std::move(q), std::move(r));
  };

  // Fold extended gcds across the list.
  Poly g = ps[0];
  std::vector<Poly> cof{Poly::constant(ctx, Rat(1))};
  for (std::size_t i = 1; i < ps.size(); ++i) {
    // Extended Euclid for (g, ps[i]).
    Poly r0 = g, r1 = ps[i];
    Poly s0 = Poly::constant(ctx, Rat(1)), s1 = Poly::zero(ctx);
    Poly t0 = Poly::zero(ctx), t1 = Poly::constant(ctx, Rat(1));
    while (!r1.is_zero()) {
      auto [q, r] = divmod(r0, r1);
      Poly s = s0 - q * s1;
      Poly t = t0 - q * t1;
      r0 = std::move(r1);
      r1 = std::move(r);
      s0 = std::move(s1);
      s1 = std::move(s);
      t0 = std::move(t1);
      t1 = std::move(t);
    }
    // r0 = s0 * g + t0 * ps[i]
    for (auto& cj : cof) cj = cj * s0;
    cof.push_back(t0);
    g = std::move(r0);
  }
  // Normalize: integer-primitive, positive leading coefficient.
  Poly gn = normalized_primitive(g);
  Rat unit = gn.lead_coeff() / g.lead_coeff();
  for (auto& cj : cof) cj = cj * unit;
  return {std::move(gn), std::move(cof)};
}

}  // namespace nsatz
