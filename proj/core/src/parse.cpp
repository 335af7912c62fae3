#include "nsatz/parse.hpp"

#include <cctype>

namespace nsatz {

namespace {

struct Parser {
  std::string_view text;
  std::size_t pos = 0;
  const CtxPtr& ctx;

  explicit Parser(std::string_view t, const CtxPtr& c) : text(t), ctx(c) {}

  [[noreturn]] void fail(const std::string& msg) const { throw parse_error(msg, pos); }

  void skip_ws() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  }
  char peek() const { return pos < text.size() ? text[pos] : '\0'; }
  bool eat(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }

  Poly parse_expr() {
    skip_ws();
    bool neg = false;
    if (eat('-')) neg = true;
    else eat('+');
    Poly acc = parse_term();
    if (neg) acc = -acc;
    for (;;) {
      skip_ws();
      if (eat('+')) acc += parse_term();
      else if (eat('-')) acc -= parse_term();
      else break;
    }
    return acc;
  }

  Poly parse_term() {
    Poly acc = parse_factor();
    for (;;) {
      skip_ws();
      if (eat('*')) acc = acc * parse_factor();
      else break;
    }
    return acc;
  }

  Poly parse_factor() {
    Poly base = parse_atom();
    skip_ws();
    if (eat('^')) {
      skip_ws();
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == start) fail("expected a non-negative integer exponent");
      unsigned long e = std::stoul(std::string(text.substr(start, pos - start)));
      base = base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  Poly parse_atom() {
    skip_ws();
    char c = peek();
    if (c == '(') {
      ++pos;
      Poly inner = parse_expr();
      skip_ws();
      if (!eat(')')) fail("expected ')'");
      check_no_juxtaposition();
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c))) return parse_ident();
    fail("expected a number, variable, or '('");
  }

  Poly parse_number() {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    Int num(std::string(text.substr(start, pos - start)));
    Int den(1);
    if (peek() == '/') {
      ++pos;
      std::size_t dstart = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == dstart) fail("expected digits after '/'");
      den = Int(std::string(text.substr(dstart, pos - dstart)));
      if (sgn(den) == 0) fail("zero denominator");
    }
    check_no_juxtaposition();
    return Poly::constant(ctx, Rat(num, den));
  }

  Poly parse_ident() {
    std::size_t start = pos;
    ++pos;
    while (pos < text.size() && std::isalnum(static_cast<unsigned char>(text[pos]))) ++pos;
    std::string name(text.substr(start, pos - start));
    auto idx = ctx->find(name);
    if (!idx) {
      pos = start;
      fail("unknown variable '" + name + "'");
    }
    check_no_juxtaposition();
    return Poly::variable(ctx, *idx);
  }

  // After a complete atom the next character must be an operator, ')' or end:
  // implicit multiplication like "2x1" is a grammar error.
  void check_no_juxtaposition() const {
    if (pos < text.size()) {
      char c = text[pos];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '(')
        throw parse_error("missing '*' between factors", pos);
    }
  }
};

}  // namespace

Poly parse(std::string_view text, const CtxPtr& ctx) {
  Parser p(text, ctx);
  p.skip_ws();
  if (p.pos == text.size()) p.fail("empty polynomial");
  Poly out = p.parse_expr();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("unexpected trailing input");
  return out;
}

std::vector<std::string> collect_identifiers(const std::vector<std::string_view>& texts) {
  std::vector<std::string> out;
  auto seen = [&](const std::string& s) {
    for (const auto& o : out)
      if (o == s) return true;
    return false;
  };
  for (auto text : texts) {
    for (std::size_t i = 0; i < text.size();) {
      if (std::isalpha(static_cast<unsigned char>(text[i]))) {
        std::size_t j = i + 1;
        while (j < text.size() && std::isalnum(static_cast<unsigned char>(text[j]))) ++j;
        std::string name(text.substr(i, j - i));
        if (!seen(name)) out.push_back(name);
        i = j;
      } else {
        ++i;
      }
    }
  }
  return out;
}

}  // namespace nsatz
