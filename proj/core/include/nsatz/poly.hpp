#pragma once

#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nsatz/rat.hpp"

namespace nsatz {

// Ordered list of distinct variable names. Shared immutably between polynomials.
class VarCtx {
 public:
  explicit VarCtx(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> find(std::string_view name) const;

  friend bool operator==(const VarCtx& a, const VarCtx& b) {
    return a.names_ == b.names_;
  }

 private:
  std::vector<std::string> names_;
};

using CtxPtr = std::shared_ptr<const VarCtx>;

CtxPtr make_ctx(std::vector<std::string> names);

// Degree of the zero polynomial ("minus infinity").
inline constexpr int deg_neg_inf = std::numeric_limits<int>::min();

// Exponent vector; length always equals the context size.
using Exp = std::vector<unsigned>;

inline unsigned exp_total(const Exp& e) {
  unsigned s = 0;
  for (unsigned x : e) s += x;
  return s;
}

// Graded lexicographic order: first by total degree, then lexicographically
// with earlier variables weighing more.
struct GrlexLess {
  bool operator()(const Exp& a, const Exp& b) const;
};

// Sparse multivariate polynomial over Q. Terms are kept in ascending graded-lex
// order; no zero coefficients are stored. Immutable context pointer.
class Poly {
 public:
  using TermMap = std::map<Exp, Rat, GrlexLess>;

  Poly() = default;  // detached placeholder; any arithmetic use is an error
  explicit Poly(CtxPtr ctx) : ctx_(std::move(ctx)) {}

  static Poly zero(CtxPtr ctx) { return Poly(std::move(ctx)); }
  static Poly constant(CtxPtr ctx, const Rat& c);
  static Poly variable(CtxPtr ctx, std::size_t var);
  static Poly term(CtxPtr ctx, Exp e, const Rat& c);

  const CtxPtr& ctx() const { return ctx_; }
  const TermMap& terms() const { return terms_; }
  std::size_t nvars() const { return ctx_ ? ctx_->size() : 0; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Value of a constant polynomial (zero included).
  Rat constant_value() const;

  int total_degree() const;
  int degree(std::size_t var) const;

  const Rat& coeff(const Exp& e) const;
  // Coefficient of var^k, a polynomial in the remaining variables (same ctx).
  Poly coeff_of_power(std::size_t var, unsigned k) const;
  // Largest term in graded-lex order; polynomial must be nonzero.
  const Exp& lead_exp() const;
  const Rat& lead_coeff() const;
  const Exp& trail_exp() const;
  const Rat& trail_coeff() const;

  // True when the pure power var^total_degree occurs with nonzero coefficient.
  bool is_regular(std::size_t var) const;
  // True when degree(var) is at least one and the coefficient of the top
  // power of var is a nonzero constant, so no specialization of the other
  // variables can lower the degree in var.
  bool is_regular_in_var_degree(std::size_t var) const;

  bool uses_var(std::size_t var) const { return degree(var) > 0; }

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Rat& c);
  friend Poly operator*(const Rat& c, const Poly& a) { return a * c; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly& operator*=(const Rat& c) { return *this = *this * c; }
  Poly pow(unsigned e) const;

  friend bool operator==(const Poly& a, const Poly& b);

  // Adds c * x^e in place.
  void add_term(const Exp& e, const Rat& c);
  // Multiplies by the monomial c * x^e.
  Poly mul_term(const Exp& e, const Rat& c) const;

  Rat eval(const std::vector<Rat>& point) const;
  // Substitutes value for var; value must share this context.
  Poly substitute(std::size_t var, const Poly& value) const;
  // Simultaneous substitution: variable i is replaced by values[i].
  Poly substitute_all(const std::vector<Poly>& values) const;

  // Appends fresh variables; existing exponents are zero-padded. The larger
  // context must extend this one by name.
  Poly lifted(const CtxPtr& larger) const;
  // Inverse of lifted: drops trailing variables, which must not occur.
  Poly projected(const CtxPtr& smaller) const;

  // Homogenizes with a new last variable of the given name.
  Poly homogenize(const std::string& new_var) const;
  // Sets var = 1 and removes it from the context.
  Poly dehomogenize(std::size_t var) const;

  // Rendering in descending graded-lex order, explicit '*' and '^'.
  std::string str() const;

 private:
  void check_ctx(const Poly& o) const;
  CtxPtr ctx_;
  TermMap terms_;
};

// Positive rational c such that a/c has coprime integer coefficients; content
// of the zero polynomial is zero.
Rat content(const Poly& a);
// a / content(a), sign-adjusted so the graded-lex leading coefficient is
// positive. Zero stays zero.
Poly normalized_primitive(const Poly& a);
// Same, but the graded-lex trailing coefficient is made positive.
Poly normalized_primitive_trailing(const Poly& a);

// Exact division: returns a/b when b divides a, std::nullopt otherwise.
std::optional<Poly> divide_exact(const Poly& a, const Poly& b);

}  // namespace nsatz
