#pragma once

#include <string_view>

#include "gabfield/extension.hpp"

namespace gabfield {

// Element text grammar, shared by fixtures, the CLI and test data:
//   expr   := ['-'] term ( ('+'|'-') term )*
//   term   := factor ( ('*'|'/') factor )*
//   factor := '(' expr ')' | atom ['^' uint]
//   atom   := uint | <field symbol> | 'x' | 'y'
// Whitespace is insignificant. Printing always emits canonical forms that
// re-parse to the same value.

/// Constant of F_q: integer literal, or a power of the field symbol for
/// extension fields ("β^10"). Rejects non-constant expressions.
FqElement parse_fq(std::string_view text, const FqContext& ctx);

/// Element of K = F_q(x); 'y' is rejected.
RatFunc parse_ratfunc(std::string_view text, const FqContext& ctx);

/// Element of L with y-powers below the extension degree.
LElement parse_lelement(std::string_view text, const CyclicExtension& ext);

}  // namespace gabfield
