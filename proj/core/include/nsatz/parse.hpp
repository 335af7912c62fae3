#pragma once

#include <string_view>
#include <vector>

#include "nsatz/poly.hpp"

namespace nsatz {

// Parses the expression grammar over the given context:
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ['^' nat]
//   atom   := rational | identifier | '(' expr ')'
// Identifiers are [a-zA-Z][a-zA-Z0-9]*; rational literals are "p" or "p/q".
// Multiplication is always explicit: "2x1" and "x1(x2+1)" are rejected.
// Unknown identifiers and malformed input raise parse_error with the offset.
Poly parse(std::string_view text, const CtxPtr& ctx);

// Identifiers of each text in order of first appearance, for reconstructing a
// context from serialized polynomials.
std::vector<std::string> collect_identifiers(const std::vector<std::string_view>& texts);

}  // namespace nsatz
