#pragma once

#include <cstdint>
#include <vector>

#include "mvp/mvp.hpp"

namespace mvp {

// Generating function of a knight on an unbounded d-dimensional board over
// the symbols a, b, c, ...: one unit term per move (+-2 along one axis, +-1
// along another), 4 d (d - 1) terms. Requires 1 <= d <= 26.
Mvp knight(int dimension);

struct RandomSpec {
    int terms = 5;
    int symbols_per_term = 2;
    int max_power = 2;
    std::vector<Symbol> alphabet{"a", "b", "c", "d"};
    std::uint64_t seed = 0;
};

// Symbols a, b, c, ... of the given pool size (1..26).
std::vector<Symbol> letters(int count);

/// Seeded random polynomial. Each of spec.terms draws multiplies
/// symbols_per_term uniform picks from the alphabet, each raised to a uniform
/// power in [1, max_power] (repeated picks add powers), and takes a
/// coefficient uniform in [1, terms]. A draw that repeats an earlier monomial
/// is discarded, so the result has at most spec.terms terms.
Mvp rmvp(const RandomSpec& spec);

// sum(|power row| * coeff) / sum(coeff), with |.| the Euclidean norm.
double expected_distance(const Mvp& p);

}  // namespace mvp
