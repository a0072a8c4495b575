#pragma once

#include <cstddef>
#include <string_view>

#include "mixed_milnor/mixed_poly.hpp"

namespace mixed_milnor {

// Grammar:
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*'? factor)*
//   factor := atom ('^' nat)*
//   atom   := coeff | 'z' nat | 'zb' nat | '|z' nat '|' | '(' expr ')'
//   coeff  := int ['/' nat] ['i'] | 'i'
// Whitespace is ignored. '|zk|' must carry an even exponent.
// The variable count is max(n_hint, largest index seen, 1).
MixedPoly parse_poly(std::string_view text, std::size_t n_hint = 0);

}  // namespace mixed_milnor
