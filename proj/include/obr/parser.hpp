#pragma once

#include <string_view>

#include "obr/formula.hpp"

namespace obr {

// Grammar, loosest to tightest:
//   iff     := implies ( "<->" implies )*        left-assoc
//   implies := or ( "->" implies )?              right-assoc
//   or      := and ( "|" and )*
//   and     := unary ( "&" unary )*
//   unary   := "!" unary | atom | "true" | "false" | "(" iff ")"
// Throws ParseError carrying the byte offset of the offending token.
Formula parse(std::string_view text);

}  // namespace obr
