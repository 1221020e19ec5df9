#include "mvp/calculus.hpp"

#include "mvp/arith.hpp"
#include "mvp/errors.hpp"
#include "mvp/parser.hpp"

namespace mvp {

namespace {

Mvp deriv_one(const Mvp& p, std::string_view s) {
    Mvp out;
    for (const auto& [term, coeff] : p) {
        const Power k = term.power_of(s);
        if (k == 0) continue;
        out.accumulate(term.with_power(s, checked_add(k, -1)), coeff * static_cast<double>(k));
    }
    return out;
}

}  // namespace

Mvp deriv(const Mvp& p, std::span<const Symbol> vars) {
    Mvp out = p;
    for (const auto& v : vars) out = deriv_one(out, v);
    return out;
}

Mvp deriv(const Mvp& p, std::initializer_list<std::string_view> vars) {
    Mvp out = p;
    for (auto v : vars) out = deriv_one(out, v);
    return out;
}

Mvp aderiv(const Mvp& p, const std::map<Symbol, std::int64_t>& orders) {
    for (const auto& [name, order] : orders) {
        if (order < 0) throw DomainError("derivative order for '" + name + "' is negative");
    }
    Mvp out = p;
    for (const auto& [name, order] : orders) {
        for (std::int64_t i = 0; i < order && !out.is_zero(); ++i) out = deriv_one(out, name);
    }
    return out;
}

Mvp horner(const Mvp& base, std::span<const double> coeffs) {
    if (coeffs.empty()) throw DomainError("horner needs at least one coefficient");
    Mvp out(coeffs.back());
    for (auto it = coeffs.rbegin() + 1; it != coeffs.rend(); ++it) out = multiply(out, base) + *it;
    return out;
}

Mvp horner(std::string_view base, std::span<const double> coeffs) {
    return horner(parse(base), coeffs);
}

}  // namespace mvp
