#pragma once

#include <string_view>

#include "padicval/poly.hpp"

namespace padicval {

/// Parses the polynomial text format:
///
///   expr := sign? term (('+' | '-') term)*
///   term := int | int '*'? 'x' | 'x' | (int '*'?)? 'x' '^' uint
///
/// Whitespace is ignored and like terms are combined, so the canonical form
/// printed by IntPolynomial::to_string() parses back to the same polynomial.
/// Throws ParseError carrying the byte offset of the offending character.
IntPolynomial parse_poly(std::string_view text);

}  // namespace padicval
