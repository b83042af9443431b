#ifndef DRENDO_TEXTIO_HPP
#define DRENDO_TEXTIO_HPP

#include <string>
#include <string_view>

#include "drendo/apoly.hpp"

namespace drendo {

// Canonical polynomial text: terms from the highest power down, joined by
// " + ", coefficients in {0..p-1}; for n > 1 coefficients are polynomials
// in the generator label, parenthesized when they have several terms.
// Examples: "T^6 + 2T^5 + 2", "wT^2 + T", "(w + 1)T^4 + w".
std::string to_string(const Fq& F, const APoly& a);
std::string to_string(const Fq& F, FqElt v);

// Accepts the canonical form plus free-style expressions: explicit or
// implicit '*', '-' (binary and unary, ASCII or U+2212), parentheses,
// '^' powers, products like "T^3(T+1)(T-1)".
APoly parse_poly(const Fq& F, std::string_view text);
FqElt parse_fq(const Fq& F, std::string_view text);

}  // namespace drendo

#endif
