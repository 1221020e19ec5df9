#pragma once

#include <string>
#include <vector>

#include "mvp/mvp.hpp"
#include "mvp/series.hpp"

namespace mvp {

enum class Order {
    canonical,  // storage order: symbols alphabetical, terms by (symbol, power) sequence
    lex,        // symbols in varorder, terms by descending power vector over varorder
};

struct RenderOptions {
    Order order = Order::canonical;
    std::vector<Symbol> varorder;  // lex only; empty means alphabetical
    int digits = 7;                // significant digits for non-integers; 0 = shortest exact
};

/// Human-readable form, e.g. "-4 + 7 bloat stoatboat^3 - 9 boat float gloat^6 goat".
/// Unit coefficients are omitted on non-constant terms, integers print without
/// a decimal point and the zero polynomial prints "0". The output is always
/// accepted by parse(); with digits = 0 the round trip is exact.
/// Throws DomainError when a lex varorder misses a symbol of p.
std::string render(const Mvp& p, const RenderOptions& options = {});

// "x^0(a b c) + x^1(a^2 b + c^6)", or "(x-a)^k(...)" for x_m_a variables.
std::string render_series(const SeriesDecomposition& s, const RenderOptions& options = {});

// Fixed notation, never exponent form.
std::string format_number(double value, int digits = 7);

}  // namespace mvp
