#pragma once

#include <string_view>

#include "hm/expr.hpp"

namespace hm::cli {

/// Grammar, whitespace-insensitive:
///   expr  := term ('x' term)*
///   term  := SL23 | C(n) | D(n) | Q(n) | SD(n) | S(n) | Dic(n) | E(p,k) | Cat(order,id)
///   n     := integer | integer '^' integer
/// D, Q and SD take the group order. Throws ParseError with the byte offset
/// of the offending token.
GroupExpr parse_expr(std::string_view text);

}  // namespace hm::cli
