#include "nsatz/rat.hpp"

#include <cctype>

namespace nsatz {

Rat::Rat(const Int& num, const Int& den) {
  if (sgn(den) == 0) throw domain_error("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw domain_error("division by zero");
  v_ /= o.v_;
  return *this;
}

Rat Rat::inv() const {
  if (is_zero()) throw domain_error("division by zero");
  return Rat(mpq_class(1) / v_);
}

Rat Rat::pow(unsigned e) const {
  mpq_class r;
  mpz_pow_ui(r.get_num_mpz_t(), v_.get_num_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), v_.get_den_mpz_t(), e);
  return Rat(std::move(r));  // already canonical: powers of coprime stay coprime
}

Rat Rat::parse(std::string_view text) {
  size_t i = 0;
  auto fail = [&](const char* msg) -> Rat { throw parse_error(msg, i); };
  bool neg = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) neg = text[i++] == '-';
  size_t num_begin = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == num_begin) return fail("expected digits in rational literal");
  Int num(std::string(text.substr(num_begin, i - num_begin)));
  Int den(1);
  if (i < text.size() && text[i] == '/') {
    ++i;
    size_t den_begin = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == den_begin) return fail("expected digits after '/'");
    den = Int(std::string(text.substr(den_begin, i - den_begin)));
  }
  if (i != text.size()) return fail("trailing characters in rational literal");
  if (neg) num = -num;
  return Rat(num, den);
}

std::string Rat::str() const {
  if (is_integer()) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

Rat rat_content_gcd(const Rat& a, const Rat& b) {
  if (a.is_zero()) return b.abs();
  if (b.is_zero()) return a.abs();
  Int g, l;
  mpz_gcd(g.get_mpz_t(), a.num().get_mpz_t(), b.num().get_mpz_t());
  mpz_lcm(l.get_mpz_t(), a.den().get_mpz_t(), b.den().get_mpz_t());
  return Rat(g, l);
}

}  // namespace nsatz
