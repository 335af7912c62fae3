#include "nsatz/poly.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace nsatz {

VarCtx::VarCtx(std::vector<std::string> names) : names_(std::move(names)) {
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw domain_error("empty variable name");
    if (!seen.insert(n).second) throw domain_error("duplicate variable name: " + n);
  }
}

std::optional<std::size_t> VarCtx::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

CtxPtr make_ctx(std::vector<std::string> names) {
  return std::make_shared<const VarCtx>(std::move(names));
}

bool GrlexLess::operator()(const Exp& a, const Exp& b) const {
  unsigned da = exp_total(a), db = exp_total(b);
  if (da != db) return da < db;
  // Equal degree: lexicographic, earlier variables weigh more.
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

void Poly::check_ctx(const Poly& o) const {
  if (ctx_ == o.ctx_) return;
  if (ctx_ && o.ctx_ && *ctx_ == *o.ctx_) return;
  throw domain_error("polynomial context mismatch");
}

Poly Poly::constant(CtxPtr ctx, const Rat& c) {
  Poly p(std::move(ctx));
  if (!c.is_zero()) p.terms_.emplace(Exp(p.nvars(), 0), c);
  return p;
}

Poly Poly::variable(CtxPtr ctx, std::size_t var) {
  if (var >= ctx->size()) throw domain_error("variable index out of range");
  Poly p(std::move(ctx));
  Exp e(p.nvars(), 0);
  e[var] = 1;
  p.terms_.emplace(std::move(e), Rat(1));
  return p;
}

Poly Poly::term(CtxPtr ctx, Exp e, const Rat& c) {
  if (e.size() != ctx->size()) throw domain_error("exponent length mismatch");
  Poly p(std::move(ctx));
  if (!c.is_zero()) p.terms_.emplace(std::move(e), c);
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && exp_total(terms_.begin()->first) == 0);
}

Rat Poly::constant_value() const {
  if (terms_.empty()) return Rat(0);
  if (!is_constant()) throw domain_error("polynomial is not constant");
  return terms_.begin()->second;
}

int Poly::total_degree() const {
  if (terms_.empty()) return deg_neg_inf;
  return static_cast<int>(exp_total(terms_.rbegin()->first));
}

int Poly::degree(std::size_t var) const {
  if (terms_.empty()) return deg_neg_inf;
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.at(var));
  return static_cast<int>(d);
}

const Rat& Poly::coeff(const Exp& e) const {
  static const Rat zero(0);
  auto it = terms_.find(e);
  return it == terms_.end() ? zero : it->second;
}

Poly Poly::coeff_of_power(std::size_t var, unsigned k) const {
  Poly out(ctx_);
  for (const auto& [e, c] : terms_) {
    if (e.at(var) != k) continue;
    Exp r = e;
    r[var] = 0;
    out.terms_.emplace(std::move(r), c);
  }
  return out;
}

const Exp& Poly::lead_exp() const {
  if (terms_.empty()) throw domain_error("zero polynomial has no leading term");
  return terms_.rbegin()->first;
}
const Rat& Poly::lead_coeff() const {
  if (terms_.empty()) throw domain_error("zero polynomial has no leading term");
  return terms_.rbegin()->second;
}
const Exp& Poly::trail_exp() const {
  if (terms_.empty()) throw domain_error("zero polynomial has no trailing term");
  return terms_.begin()->first;
}
const Rat& Poly::trail_coeff() const {
  if (terms_.empty()) throw domain_error("zero polynomial has no trailing term");
  return terms_.begin()->second;
}

bool Poly::is_regular(std::size_t var) const {
  if (terms_.empty()) throw domain_error("regularity of the zero polynomial");
  unsigned d = static_cast<unsigned>(total_degree());
  Exp pure(nvars(), 0);
  pure[var] = d;
  return terms_.count(pure) != 0;
}

bool Poly::is_regular_in_var_degree(std::size_t var) const {
  if (terms_.empty()) throw domain_error("regularity of the zero polynomial");
  int d = degree(var);
  if (d < 1) return false;
  for (const auto& [e, c] : terms_) {
    if (e[var] != static_cast<unsigned>(d)) continue;
    for (std::size_t j = 0; j < e.size(); ++j)
      if (j != var && e[j] != 0) return false;
  }
  return true;
}

Poly Poly::operator-() const {
  Poly out(ctx_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

void Poly::add_term(const Exp& e, const Rat& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  check_ctx(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  check_ctx(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly Poly::mul_term(const Exp& e, const Rat& c) const {
  Poly out(ctx_);
  if (c.is_zero()) return out;
  for (const auto& [te, tc] : terms_) {
    Exp r = te;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += e[i];
    out.terms_.emplace(std::move(r), tc * c);
  }
  return out;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.check_ctx(b);
  Poly out(a.ctx_);
  if (a.terms_.empty() || b.terms_.empty()) return out;
  // Iterate over the smaller operand's terms.
  const Poly& s = a.terms_.size() <= b.terms_.size() ? a : b;
  const Poly& l = a.terms_.size() <= b.terms_.size() ? b : a;
  for (const auto& [e, c] : s.terms_) {
    for (const auto& [le, lc] : l.terms_) {
      Exp r = le;
      for (std::size_t i = 0; i < r.size(); ++i) r[i] += e[i];
      out.add_term(r, lc * c);
    }
  }
  return out;
}

Poly operator*(const Poly& a, const Rat& c) {
  Poly out(a.ctx_);
  if (c.is_zero()) return out;
  for (const auto& [e, tc] : a.terms_) out.terms_.emplace(e, tc * c);
  return out;
}

Poly Poly::pow(unsigned e) const {
  Poly base = *this;
  Poly out = Poly::constant(ctx_, Rat(1));
  while (e) {
    if (e & 1u) out = out * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return out;
}

bool operator==(const Poly& a, const Poly& b) {
  a.check_ctx(b);
  return a.terms_ == b.terms_;
}

Rat Poly::eval(const std::vector<Rat>& point) const {
  if (point.size() != nvars()) throw domain_error("evaluation point length mismatch");
  Rat acc(0);
  for (const auto& [e, c] : terms_) {
    Rat t = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) t *= point[i].pow(e[i]);
    acc += t;
  }
  return acc;
}

Poly Poly::substitute(std::size_t var, const Poly& value) const {
  check_ctx(value);
  Poly out(ctx_);
  std::vector<Poly> powers{Poly::constant(ctx_, Rat(1))};
  for (const auto& [e, c] : terms_) {
    unsigned k = e.at(var);
    while (powers.size() <= k) powers.push_back(powers.back() * value);
    Exp rest = e;
    rest[var] = 0;
    out += powers[k].mul_term(rest, c);
  }
  return out;
}

Poly Poly::substitute_all(const std::vector<Poly>& values) const {
  if (values.size() != nvars()) throw domain_error("substitution length mismatch");
  Poly out(ctx_);
  std::vector<std::vector<Poly>> powers(nvars(), {Poly::constant(ctx_, Rat(1))});
  for (const auto& [e, c] : terms_) {
    Poly t = Poly::constant(ctx_, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      auto& pw = powers[i];
      while (pw.size() <= e[i]) pw.push_back(pw.back() * values[i]);
      t = t * pw[e[i]];
    }
    out += t;
  }
  return out;
}

Poly Poly::lifted(const CtxPtr& larger) const {
  if (larger->size() < nvars()) throw domain_error("lift target smaller than context");
  for (std::size_t i = 0; i < nvars(); ++i)
    if (larger->name(i) != ctx_->name(i))
      throw domain_error("lift target does not extend context");
  Poly out(larger);
  for (const auto& [e, c] : terms_) {
    Exp r = e;
    r.resize(larger->size(), 0);
    out.terms_.emplace(std::move(r), c);
  }
  return out;
}

Poly Poly::projected(const CtxPtr& smaller) const {
  if (smaller->size() > nvars()) throw domain_error("projection target larger than context");
  for (std::size_t i = 0; i < smaller->size(); ++i)
    if (smaller->name(i) != ctx_->name(i))
      throw domain_error("projection target does not prefix context");
  Poly out(smaller);
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = smaller->size(); i < e.size(); ++i)
      if (e[i]) throw domain_error("projection drops a used variable");
    Exp r(e.begin(), e.begin() + smaller->size());
    out.terms_.emplace(std::move(r), c);
  }
  return out;
}

Poly Poly::homogenize(const std::string& new_var) const {
  auto names = ctx_->names();
  names.push_back(new_var);
  CtxPtr bigger = make_ctx(std::move(names));
  Poly out(bigger);
  if (terms_.empty()) return out;
  unsigned d = static_cast<unsigned>(total_degree());
  for (const auto& [e, c] : terms_) {
    Exp r = e;
    r.push_back(d - exp_total(e));
    out.terms_.emplace(std::move(r), c);
  }
  return out;
}

Poly Poly::dehomogenize(std::size_t var) const {
  if (var >= nvars()) throw domain_error("variable index out of range");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < nvars(); ++i)
    if (i != var) names.push_back(ctx_->name(i));
  CtxPtr smaller = make_ctx(std::move(names));
  Poly out(smaller);
  for (const auto& [e, c] : terms_) {
    Exp r;
    r.reserve(e.size() - 1);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (i != var) r.push_back(e[i]);
    out.add_term(r, c);  // terms may merge once var is set to 1
  }
  return out;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rat mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += ctx_->name(i);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      os << mag.str();
    } else if (mag.is_one()) {
      os << mono;
    } else {
      os << mag.str() << "*" << mono;
    }
  }
  return os.str();
}

Rat content(const Poly& a) {
  Rat g(0);
  for (const auto& [e, c] : a.terms()) g = rat_content_gcd(g, c);
  return g;
}

Poly normalized_primitive(const Poly& a) {
  if (a.is_zero()) return a;
  Rat c = content(a);
  if (a.lead_coeff().sign() < 0) c = -c;
  return a * c.inv();
}

Poly normalized_primitive_trailing(const Poly& a) {
  if (a.is_zero()) return a;
  Rat c = content(a);
  if (a.trail_coeff().sign() < 0) c = -c;
  return a * c.inv();
}

std::optional<Poly> divide_exact(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw domain_error("division by the zero polynomial");
  Poly rem = a;
  Poly quo(a.ctx());
  const Exp& be = b.lead_exp();
  const Rat& bc = b.lead_coeff();
  while (!rem.is_zero()) {
    const Exp& re = rem.lead_exp();
    Exp q(re.size());
    for (std::size_t i = 0; i < re.size(); ++i) {
      if (re[i] < be[i]) return std::nullopt;
      q[i] = re[i] - be[i];
    }
    Rat qc = rem.lead_coeff() / bc;
    quo.add_term(q, qc);
    rem -= b.mul_term(q, qc);
  }
  return quo;
}

}  // namespace nsatz
