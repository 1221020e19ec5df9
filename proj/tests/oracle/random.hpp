#pragma once

// Hand-rolled generators for property tests. Polynomials are built from the
// core primitives only (Term::from_pairs, Mvp::accumulate).

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "mvp/mvp.hpp"

namespace oracle {

inline const std::vector<std::string>& small_alphabet() {
    static const std::vector<std::string> names{"a", "b", "c", "d"};
    return names;
}

struct Shape {
    int max_terms = 8;
    int min_power = -3;
    int max_power = 3;
    int max_coeff = 9;       // integer coefficients in [-max_coeff, max_coeff] \ {0}
    bool fractional = false;  // coefficients become c / 8 (dyadic, so sums stay exact)
};

inline mvp::Mvp random_mvp(std::mt19937_64& rng, const Shape& shape = {},
                           const std::vector<std::string>& alphabet = small_alphabet()) {
    std::uniform_int_distribution<int> nterms(0, shape.max_terms);
    std::uniform_int_distribution<int> power(shape.min_power, shape.max_power);
    std::uniform_int_distribution<int> coeff(-shape.max_coeff, shape.max_coeff);
    std::bernoulli_distribution present(0.6);

    mvp::Mvp p;
    const int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        std::vector<mvp::Term::Entry> raw;
        for (const auto& s : alphabet) {
            if (present(rng)) raw.emplace_back(s, power(rng));
        }
        int c = 0;
        while (c == 0) c = coeff(rng);
        p.accumulate(mvp::Term::from_pairs(std::move(raw)), shape.fractional ? c / 8.0 : c);
    }
    return p;
}

inline mvp::Mvp random_polynomial(std::mt19937_64& rng, int max_terms = 8, int max_power = 3) {
    Shape s;
    s.max_terms = max_terms;
    s.min_power = 0;
    s.max_power = max_power;
    return random_mvp(rng, s);
}

// Arbitrary doubles, for round-trip and kernel-agreement checks.
inline mvp::Mvp random_real_mvp(std::mt19937_64& rng, int max_terms = 8) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> power(-3, 3);
    std::uniform_real_distribution<double> mantissa(-1.0, 1.0);
    std::uniform_int_distribution<int> exponent(-12, 12);
    std::bernoulli_distribution present(0.6);

    mvp::Mvp p;
    const int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        std::vector<mvp::Term::Entry> raw;
        for (const auto& s : small_alphabet()) {
            if (present(rng)) raw.emplace_back(s, power(rng));
        }
        p.accumulate(mvp::Term::from_pairs(std::move(raw)), std::ldexp(mantissa(rng), exponent(rng)));
    }
    return p;
}

// Every coefficient nonzero and every stored power nonzero.
inline bool well_formed(const mvp::Mvp& p) {
    for (const auto& [term, coeff] : p) {
        if (coeff == 0.0) return false;
        for (const auto& [name, power] : term) {
            if (power == 0) return false;
        }
    }
    return true;
}

}  // namespace oracle
