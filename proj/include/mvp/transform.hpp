#pragma once

#include <map>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "mvp/mvp.hpp"

namespace mvp {

// One step of a substitution. Numbers are lifted to constant polynomials.
struct Binding {
    Symbol symbol;
    Mvp value;

    Binding(std::string_view s, Mvp v) : symbol(s), value(std::move(v)) {}
    Binding(std::string_view s, double v) : symbol(s), value(v) {}
    Binding(std::string_view s, int v) : symbol(s), value(static_cast<double>(v)) {}
    Binding(std::string_view s, std::string_view expr);
    Binding(std::string_view s, const char* expr) : Binding(s, std::string_view(expr)) {}
};

/// Apply bindings strictly left to right: each one rewrites c s^k R as
/// c v^k R in the current polynomial. A constant value may meet negative k
/// (real reciprocal power); a non-constant value may not. Throws DomainError
/// on a negative power of a non-constant value and on 0^k with k < 0.
Mvp substitute(const Mvp& p, std::span<const Binding> bindings);

using SubsResult = std::variant<Mvp, double>;

// substitute(), then with lose set a constant result collapses to a scalar.
SubsResult subs(const Mvp& p, std::span<const Binding> bindings, bool lose = true);

enum class Execution { automatic, serial, parallel };

/// Pointwise numeric evaluation. Every symbol of p must be bound; vectors
/// have a common length n or length 1 (recycled). Throws DomainError on an
/// unbound symbol, incompatible lengths or 0^k with k < 0.
std::vector<double> subvec(const Mvp& p, const std::map<Symbol, std::vector<double>>& bindings,
                           Execution execution = Execution::automatic);

// Negate every power of every symbol; coefficients unchanged.
Mvp invert(const Mvp& p);

}  // namespace mvp
