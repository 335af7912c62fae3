#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

#include "nsatz/errors.hpp"

namespace nsatz {

using Int = mpz_class;

// Exact rational number. Invariant: gcd(numerator, denominator) = 1 and
// denominator >= 1; zero is 0/1.
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(long n) : v_(n) {}  // NOLINT: implicit on purpose, mirrors integer literals
  explicit Rat(const Int& n) : v_(n) {}
  Rat(const Int& num, const Int& den);
  Rat(long num, long den) : Rat(Int(num), Int(den)) {}

  // Accepts "p", "-p", "p/q" with q > 0 after sign normalization.
  static Rat parse(std::string_view text);

  const Int& num() const { return v_.get_num(); }
  const Int& den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rat abs() const { return Rat(mpq_class(::abs(v_))); }
  Rat inv() const;
  Rat pow(unsigned e) const;

  // Renders "p/q", omitting "/q" when q = 1.
  std::string str() const;

  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
         : c > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
  }

 private:
  explicit Rat(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

// gcd(p1,p2)/lcm(q1,q2): the canonical positive generator of the fractional
// ideal (a, b); both a/g and b/g are integers with coprime numerators.
Rat rat_content_gcd(const Rat& a, const Rat& b);

}  // namespace nsatz
