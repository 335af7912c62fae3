#include "nsatz/nullsatz.hpp"

#include <algorithm>
#include <map>

#include "nsatz/errors.hpp"
#include "nsatz/matrix.hpp"

namespace nsatz {

namespace {

bool is_homogeneous(const Poly& p) {
  if (p.is_zero()) return true;
  unsigned d = exp_total(p.terms().begin()->first);
  for (const auto& [e, c] : p.terms())
    if (exp_total(e) != d) return false;
  return true;
}

void monomials_up_to(std::size_t n, Exp& cur, std::size_t pos, int left,
                     std::vector<Exp>& out) {
  if (pos + 1 == n) {
    for (int k = 0; k <= left; ++k) {
      cur[pos] = static_cast<unsigned>(k);
      out.push_back(cur);
    }
    cur[pos] = 0;
    return;
  }
  for (int k = 0; k <= left; ++k) {
    cur[pos] = static_cast<unsigned>(k);
    monomials_up_to(n, cur, pos + 1, left - k, out);
  }
  cur[pos] = 0;
}

Exp exp_sum(const Exp& a, const Exp& b) {
  Exp r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

}  // namespace

bool verify_certificate(const Certificate& cert, const Ideal& ideal) {
  validate_ideal(ideal);
  if (cert.cofactors.size() != ideal.gens.size())
    throw domain_error("certificate cofactor count does not match the generators");
  if (cert.rho < 1) return false;
  if (cert.kind == CertKind::Unit) {
    if (cert.rho != 1) return false;
    if (!cert.target.is_constant() || !cert.target.constant_value().is_one()) return false;
  }
  Poly lhs = Poly::zero(ideal.ctx);
  for (std::size_t i = 0; i < ideal.gens.size(); ++i)
    lhs += cert.cofactors[i] * ideal.gens[i];
  return lhs == cert.target.pow(static_cast<unsigned>(cert.rho));
}

WeakNssResult weak_nss(const Ideal& ideal, std::uint64_t seed) {
  validate_ideal(ideal);
  if (ideal.gens.empty())
    throw domain_error("the weak Nullstellensatz needs at least one generator");
  WeakNssResult out;
  out.chain = kronecker_resolvent(ideal, seed);
  if (!out.chain.complete_resolvent.is_constant()) return out;
  if (!out.chain.complete_resolvent.constant_value().is_one())
    throw error("internal: constant resolvent is not 1");
  if (!out.chain.resolvent_cofactors) throw error("internal: resolvent cofactors missing");

  std::vector<Poly> cof = *out.chain.resolvent_cofactors;
  if (out.chain.change) {
    LinearChange inv = inverse(*out.chain.change);
    for (Poly& a : cof) a = apply_linear_change(a, inv);
  }
  Certificate cert;
  cert.kind = CertKind::Unit;
  cert.target = Poly::constant(ideal.ctx, Rat(1));
  cert.rho = 1;
  cert.cofactors = std::move(cof);
  if (!verify_certificate(cert, ideal))
    throw error("internal: unit certificate failed verification");
  out.empty = true;
  out.certificate = std::move(cert);
  return out;
}

MembershipResult ideal_membership_bounded(const Poly& f, const Ideal& ideal, int cap) {
  validate_ideal(ideal);
  if (ideal.gens.empty()) throw domain_error("membership in the zero ideal is equality");
  if (cap < 0) throw domain_error("negative degree cap");
  const CtxPtr& ctx = ideal.ctx;
  std::size_t n = ctx->size();

  std::vector<Exp> unknowns;
  {
    Exp cur(n, 0);
    monomials_up_to(n, cur, 0, cap, unknowns);
    std::sort(unknowns.begin(), unknowns.end(), GrlexLess{});
  }

  std::map<Exp, std::size_t, GrlexLess> row_of;
  auto touch = [&](const Exp& e) {
    row_of.emplace(e, row_of.size());
  };
  for (const Poly& g : ideal.gens)
    for (const Exp& m : unknowns)
      for (const auto& [e, c] : g.terms()) touch(exp_sum(e, m));
  for (const auto& [e, c] : f.terms()) touch(e);

  std::size_t rows = row_of.size();
  std::size_t cols = ideal.gens.size() * unknowns.size();
  RatMat a(rows, std::vector<Rat>(cols, Rat(0)));
  std::vector<Rat> b(rows, Rat(0));
  for (std::size_t i = 0; i < ideal.gens.size(); ++i)
    for (std::size_t j = 0; j < unknowns.size(); ++j) {
      std::size_t col = i * unknowns.size() + j;
      for (const auto& [e, c] : ideal.gens[i].terms())
        a[row_of.at(exp_sum(e, unknowns[j]))][col] += c;
    }
  for (const auto& [e, c] : f.terms()) b[row_of.at(e)] = c;

  MembershipResult out;
  out.cap = cap;
  auto sol = solve_exact(a, b);
  if (!sol) return out;

  Certificate cert;
  cert.kind = CertKind::Radical;
  cert.target = f;
  cert.rho = 1;
  for (std::size_t i = 0; i < ideal.gens.size(); ++i) {
    Poly co = Poly::zero(ctx);
    for (std::size_t j = 0; j < unknowns.size(); ++j) {
      const Rat& c = (*sol)[i * unknowns.size() + j];
      if (!c.is_zero()) co.add_term(unknowns[j], c);
    }
    cert.cofactors.push_back(std::move(co));
  }
  if (!verify_certificate(cert, ideal))
    throw error("internal: bounded membership certificate failed verification");
  out.member = true;
  out.certificate = std::move(cert);
  return out;
}

RadicalMembership radical_membership(const Poly& f, const Ideal& ideal, std::uint64_t seed,
                                     bool minimize_rho) {
  validate_ideal(ideal);
  if (ideal.gens.empty()) throw domain_error("radical of the zero ideal is trivial");
  if (f.ctx() != ideal.ctx && (!f.ctx() || !(*f.ctx() == *ideal.ctx)))
    throw domain_error("target context mismatch");
  const CtxPtr& ctx = ideal.ctx;
  std::size_t n = ctx->size();

  RadicalMembership out;
  for (std::size_t i = 0; i < ideal.gens.size(); ++i) {
    if (!(f == ideal.gens[i])) continue;
    Certificate cert;
    cert.kind = CertKind::Radical;
    cert.target = f;
    cert.rho = 1;
    cert.cofactors.assign(ideal.gens.size(), Poly::zero(ctx));
    cert.cofactors[i] = Poly::constant(ctx, Rat(1));
    out.member = true;
    out.certificate = std::move(cert);
    return out;
  }

  std::string aux = "x0";
  while (ctx->find(aux)) aux += "0";
  std::vector<std::string> names = ctx->names();
  names.push_back(aux);
  CtxPtr ext = make_ctx(std::move(names));
  std::size_t x0 = n;

  Ideal abar;
  abar.ctx = ext;
  for (const Poly& g : ideal.gens) abar.gens.push_back(g.lifted(ext));
  abar.gens.push_back(Poly::variable(ext, x0) * f.lifted(ext) -
                      Poly::constant(ext, Rat(1)));

  WeakNssResult w = weak_nss(abar, seed);
  out.chain = w.chain;
  if (!w.empty) return out;

  const std::vector<Poly>& acof = w.certificate->cofactors;
  int rho = 1;
  for (std::size_t i = 0; i < ideal.gens.size(); ++i)
    rho = std::max(rho, acof[i].degree(x0));

  Certificate cert;
  cert.kind = CertKind::Radical;
  cert.target = f;
  cert.rho = rho;
  for (std::size_t i = 0; i < ideal.gens.size(); ++i) {
    Poly co = Poly::zero(ctx);
    for (int k = 0; k <= acof[i].degree(x0); ++k) {
      Poly ck = acof[i].coeff_of_power(x0, static_cast<unsigned>(k)).projected(ctx);
      if (ck.is_zero()) continue;
      co += ck * f.pow(static_cast<unsigned>(rho - k));
    }
    cert.cofactors.push_back(std::move(co));
  }
  if (!verify_certificate(cert, ideal))
    throw error("internal: radical certificate failed verification");

  if (minimize_rho) {
    int maxdeg = 0;
    for (const Poly& g : ideal.gens) maxdeg = std::max(maxdeg, g.total_degree());
    for (int s = 1; s < rho; ++s) {
      int cap = std::max(4, maxdeg + s * std::max(0, f.total_degree()));
      MembershipResult mb = ideal_membership_bounded(f.pow(static_cast<unsigned>(s)),
                                                     ideal, cap);
      if (!mb.member) continue;
      cert.rho = s;
      cert.cofactors = mb.certificate->cofactors;
      break;
    }
  }

  out.member = true;
  out.certificate = std::move(cert);
  return out;
}

int product_exponent(const std::vector<int>& rhos) {
  if (rhos.empty()) throw domain_error("product exponent of an empty list");
  int r = 1;
  for (int rho : rhos) {
    if (rho < 1) throw domain_error("exponents must be positive");
    r += rho - 1;
  }
  return r;
}

WpnssResult weak_projective_nss(const Ideal& ideal, std::uint64_t seed) {
  validate_ideal(ideal);
  if (ideal.gens.empty())
    throw domain_error("the projective Nullstellensatz needs at least one generator");
  for (const Poly& g : ideal.gens)
    if (!is_homogeneous(g)) throw domain_error("non-homogeneous generator");

  WpnssResult out;
  std::vector<int> rhos;
  for (std::size_t i = 0; i < ideal.ctx->size(); ++i) {
    RadicalMembership rm =
        radical_membership(Poly::variable(ideal.ctx, i), ideal, seed, true);
    if (!rm.member) {
      out.has_projective_zeros = true;
      out.failing_var = i;
      return out;
    }
    out.per_var.push_back({i, rm.certificate->rho, *rm.certificate});
    rhos.push_back(rm.certificate->rho);
  }
  out.exponent = product_exponent(rhos);
  return out;
}

}  // namespace nsatz
