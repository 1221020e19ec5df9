#include "mvp/series.hpp"

#include <array>

#include "mvp/errors.hpp"
#include "mvp/transform.hpp"

namespace mvp {

Mvp trunc(const Mvp& p, Power n) {
    Mvp out;
    for (const auto& [term, coeff] : p) {
        if (term.total_degree() <= n) out.accumulate(term, coeff);
    }
    return out;
}

Mvp trunc1(const Mvp& p, const std::map<Symbol, Power>& limits) {
    Mvp out;
    for (const auto& [term, coeff] : p) {
        bool keep = true;
        for (const auto& [name, limit] : limits) {
            if (term.power_of(name) > limit) {
                keep = false;
                break;
            }
        }
        if (keep) out.accumulate(term, coeff);
    }
    return out;
}

Mvp onevarpow(const Mvp& p, const std::map<Symbol, Power>& targets) {
    Mvp out;
    for (const auto& [term, coeff] : p) {
        bool keep = true;
        for (const auto& [name, power] : targets) {
            if (term.power_of(name) != power) {
                keep = false;
                break;
            }
        }
        if (!keep) continue;
        Term rest = term;
        for (const auto& [name, power] : targets) rest = rest.without(name);
        out.accumulate(rest, coeff);
    }
    return out;
}

std::optional<std::string> shifted_display(const Symbol& name) {
    const auto at = name.find("_m_");
    if (at == std::string::npos || at == 0 || at + 3 >= name.size()) return std::nullopt;
    return "(" + name.substr(0, at) + "-" + name.substr(at + 3) + ")";
}

SeriesDecomposition series(const Mvp& p, const Symbol& variable) {
    if (!is_valid_symbol(variable)) throw DomainError("invalid symbol name '" + variable + "'");
    std::map<Power, Mvp> by_power;
    for (const auto& [term, coeff] : p) {
        by_power[term.power_of(variable)].accumulate(term.without(variable), coeff);
    }
    SeriesDecomposition s{variable, shifted_display(variable), {}};
    for (auto& [k, coefficient] : by_power) {
        if (!coefficient.is_zero()) s.components.emplace_back(k, std::move(coefficient));
    }
    return s;
}

Mvp reconstruct(const SeriesDecomposition& s) {
    Mvp out;
    for (const auto& [k, coefficient] : s.components) {
        const Term shift = Term::variable(s.variable, k);
        for (const auto& [term, coeff] : coefficient) out.accumulate(term * shift, coeff);
    }
    return out;
}

SeriesDecomposition taylor(const Mvp& p, const Symbol& v, const Symbol& about) {
    const Symbol shifted = v + "_m_" + about;
    Mvp offset = Mvp::variable(shifted);
    offset.accumulate(Term::variable(about), 1.0);
    const std::array<Binding, 1> binding{Binding(v, std::move(offset))};
    return series(substitute(p, binding), shifted);
}

}  // namespace mvp
