#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mvp/mvp.hpp"

namespace mvp {

// Keep terms whose total degree (negatives included) is <= n.
Mvp trunc(const Mvp& p, Power n);

// Keep terms whose power of each listed symbol (0 if absent) is <= its limit.
Mvp trunc1(const Mvp& p, const std::map<Symbol, Power>& limits);

// Keep terms whose power of each target symbol equals the target exactly,
// then drop those symbols from the kept terms.
Mvp onevarpow(const Mvp& p, const std::map<Symbol, Power>& targets);

/// p written as sum_k coefficient_k * variable^k, the coefficients free of
/// `variable`. Components are sorted by ascending power and none is zero.
struct SeriesDecomposition {
    Symbol variable;
    std::optional<std::string> display;  // "(x-foo)" for a variable named x_m_foo
    std::vector<std::pair<Power, Mvp>> components;

    // Head used when printing: the display alias or the variable itself.
    const std::string& head() const { return display ? *display : variable; }
};

SeriesDecomposition series(const Mvp& p, const Symbol& variable);

// Inverse of series(): sum_k coefficient_k * variable^k.
Mvp reconstruct(const SeriesDecomposition& s);

// series(subs(p, v = v_m_about + about), v_m_about).
SeriesDecomposition taylor(const Mvp& p, const Symbol& v, const Symbol& about);

// "(x-foo)" when name has the form x_m_foo with both parts nonempty.
std::optional<std::string> shifted_display(const Symbol& name);

}  // namespace mvp
