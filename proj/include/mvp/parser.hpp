#pragma once

#include <string_view>

#include "mvp/mvp.hpp"

namespace mvp {

/// Parse polynomial text such as "3 x y + z^3 + x y^6 z" or "a^-2 b^-1".
///
///   expr    := ws [sign] product (sign product)* ws
///   product := item (('*' | ws) item)*
///   item    := number | symbol ['^' ['-'] integer]
///
/// Juxtaposed factors need whitespace or '*' between them, so "xy" is one
/// symbol. Numbers anywhere in a product multiply into the coefficient, a
/// leading sign applies to the whole product, and like terms combine.
/// Throws ParseError.
Mvp parse(std::string_view input);

Mvp parse_or_lift(std::string_view input);
Mvp parse_or_lift(double value);
inline Mvp parse_or_lift(const Mvp& p) { return p; }

namespace literals {
inline Mvp operator""_mvp(const char* s, std::size_t n) { return parse(std::string_view(s, n)); }
}  // namespace literals

}  // namespace mvp
