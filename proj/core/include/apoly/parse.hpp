#pragma once

#include <string_view>

#include "apoly/polynomial.hpp"

namespace apoly {

/// Parses the textual polynomial syntax
///
///   poly     := ws term { ws ("+"|"-") ws term } ws
///   term     := [ integer ] { ["*"] factor }
///   factor   := ident [ "^" sinteger ]
///
/// Juxtaposition and "*" both denote multiplication, exponents may be
/// negative, and the first term may carry a leading "-". Throws ParseError
/// with a 1-based line and column.
LaurentPolynomial parse_poly(std::string_view text);

}  // namespace apoly
