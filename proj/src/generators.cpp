#include "mvp/generators.hpp"

#include <cmath>
#include <random>
#include <set>

#include "mvp/disord.hpp"
#include "mvp/errors.hpp"

namespace mvp {

std::vector<Symbol> letters(int count) {
    if (count < 1 || count > 26) throw DomainError("letter pool size must be between 1 and 26");
    std::vector<Symbol> out;
    for (int i = 0; i < count; ++i) out.emplace_back(1, static_cast<char>('a' + i));
    return out;
}

Mvp knight(int dimension) {
    if (dimension < 1) throw DomainError("knight dimension must be positive");
    const auto axes = letters(dimension);
    Mvp out;
    for (std::size_t i = 0; i < axes.size(); ++i) {
        for (std::size_t j = 0; j < axes.size(); ++j) {
            if (i == j) continue;
            for (Power long_step : {-2, 2}) {
                for (Power short_step : {-1, 1}) {
                    out.accumulate(Term::from_pairs({{axes[i], long_step}, {axes[j], short_step}}), 1.0);
                }
            }
        }
    }
    return out;
}

Mvp rmvp(const RandomSpec& spec) {
    if (spec.terms < 1 || spec.symbols_per_term < 1 || spec.max_power < 1) {
        throw DomainError("rmvp arguments must be positive");
    }
    if (spec.alphabet.empty()) throw DomainError("rmvp needs a nonempty alphabet");

    std::mt19937_64 rng(spec.seed);
    std::uniform_int_distribution<std::size_t> pick(0, spec.alphabet.size() - 1);
    std::uniform_int_distribution<int> power(1, spec.max_power);
    std::uniform_int_distribution<int> coeff(1, spec.terms);

    Mvp out;
    std::set<Term> seen;
    for (int n = 0; n < spec.terms; ++n) {
        std::vector<Term::Entry> raw;
        for (int k = 0; k < spec.symbols_per_term; ++k) raw.emplace_back(spec.alphabet[pick(rng)], power(rng));
        Term t = Term::from_pairs(std::move(raw));
        const double c = coeff(rng);
        if (seen.insert(t).second) out.accumulate(t, c);
    }
    return out;
}

double expected_distance(const Mvp& p) {
    const auto weights = coeffs(p);
    const auto norms = powers(p).map([](const PowerRow& row) {
        double s = 0.0;
        for (Power k : row.powers) s += static_cast<double>(k) * static_cast<double>(k);
        return std::sqrt(s);
    });
    return sum(norms * weights) / sum(weights);
}

}  // namespace mvp
