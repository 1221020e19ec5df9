#pragma once

#include <string>
#include <string_view>

#include "mvp/mvp.hpp"

namespace mvp {

// Canonical JSON: {"terms":[{"powers":{"x":2,"y":3},"coeff":-3.0},...]} with
// terms and symbols in canonical order. Compact (no whitespace).
std::string to_json(const Mvp& p);

// Inverse of to_json. Accepts terms in any order; like terms combine.
// Throws ParseError on malformed JSON and DomainError on bad symbols/powers.
Mvp from_json(std::string_view text);

// Lowercase hex SHA-1 of the canonical JSON.
std::string content_hash(const Mvp& p);

// Lowercase hex SHA-1 of arbitrary bytes.
std::string sha1_hex(std::string_view bytes);

}  // namespace mvp
