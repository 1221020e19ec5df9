#include "mvp/transform.hpp"

#include <algorithm>

#include "mvp/arith.hpp"
#include "mvp/errors.hpp"
#include "mvp/kernels.hpp"
#include "mvp/parser.hpp"

namespace mvp {

namespace {

constexpr std::size_t parallel_points = 4096;

Mvp substitute_one(const Mvp& p, const Symbol& s, const Mvp& value) {
    Mvp out;
    if (value.is_constant()) {
        const double base = value.constant();
        for (const auto& [term, coeff] : p) {
            const Power k = term.power_of(s);
            if (k == 0) {
                out.accumulate(term, coeff);
                continue;
            }
            if (base == 0.0 && k < 0) throw DomainError("substituting 0 for '" + s + "' which has a negative power");
            out.accumulate(term.without(s), coeff * kernels::real_power(base, k));
        }
        return out;
    }

    std::map<Power, Mvp> power_cache;
    for (const auto& [term, coeff] : p) {
        const Power k = term.power_of(s);
        if (k == 0) {
            out.accumulate(term, coeff);
            continue;
        }
        if (k < 0) {
            throw DomainError("cannot substitute a non-constant polynomial for '" + s + "' which has a negative power");
        }
        auto it = power_cache.find(k);
        if (it == power_cache.end()) it = power_cache.emplace(k, pow(value, k)).first;
        const Term rest = term.without(s);
        for (const auto& [tv, cv] : it->second) out.accumulate(rest * tv, coeff * cv);
    }
    return out;
}

}  // namespace

Binding::Binding(std::string_view s, std::string_view expr) : symbol(s), value(parse(expr)) {}

Mvp substitute(const Mvp& p, std::span<const Binding> bindings) {
    Mvp current = p;
    for (const auto& b : bindings) {
        if (!is_valid_symbol(b.symbol)) throw DomainError("invalid symbol name '" + b.symbol + "'");
        current = substitute_one(current, b.symbol, b.value);
    }
    return current;
}

SubsResult subs(const Mvp& p, std::span<const Binding> bindings, bool lose) {
    Mvp result = substitute(p, bindings);
    if (lose && result.is_constant()) return result.constant();
    return result;
}

std::vector<double> subvec(const Mvp& p, const std::map<Symbol, std::vector<double>>& bindings,
                           Execution execution) {
    kernels::Columns columns;
    std::map<Symbol, std::size_t> column_of;
    std::size_t points = 1;
    bool fixed = false;
    for (const auto& [name, values] : bindings) {
        if (values.empty()) throw DomainError("binding for '" + name + "' is empty");
        if (values.size() != 1) {
            if (fixed && values.size() != points) throw DomainError("binding lengths are incompatible");
            points = values.size();
            fixed = true;
        }
        column_of.emplace(name, columns.values.size());
        columns.values.push_back(values);
    }
    columns.points = points;

    kernels::EvalPlan plan;
    plan.offsets.push_back(0);
    for (const auto& [term, coeff] : p) {
        plan.coeffs.push_back(coeff);
        for (const auto& [name, power] : term) {
            auto it = column_of.find(name);
            if (it == column_of.end()) throw DomainError("symbol '" + name + "' is not bound");
            plan.factors.push_back({it->second, power});
        }
        plan.offsets.push_back(plan.factors.size());
    }

    bool parallel = execution == Execution::parallel ||
                    (execution == Execution::automatic && points >= parallel_points && kernels::max_threads() > 1);
    return parallel ? kernels::evaluate_parallel(plan, columns) : kernels::evaluate_serial(plan, columns);
}

Mvp invert(const Mvp& p) {
    Mvp out;
    for (const auto& [term, coeff] : p) out.accumulate(term.inverted(), coeff);
    return out;
}

}  // namespace mvp
