#include <cmath>
#include <set>
#include <tuple>

#include "doctest.h"
#include "mvp/all.hpp"

using namespace mvp;

TEST_SUITE("generators") {

TEST_CASE("knight(2) has the eight planar moves") {
    const Mvp k = knight(2);
    CHECK(render(k) == "a^-2 b^-1 + a^-2 b + a^-1 b^-2 + a^-1 b^2 + a b^-2 + a b^2 + a^2 b^-1 + a^2 b");
    CHECK(knight(1).is_zero());
    CHECK_THROWS_AS(knight(0), DomainError);
    CHECK_THROWS_AS(knight(27), DomainError);
}

TEST_CASE("knight(d) term count matches brute-force enumeration") {
    for (int d = 1; d <= 6; ++d) {
        std::set<std::tuple<int, int, int, int>> moves;
        for (int i = 0; i < d; ++i) {
            for (int j = 0; j < d; ++j) {
                if (i == j) continue;
                for (int s = -2; s <= 2; s += 4) {
                    for (int t = -1; t <= 1; t += 2) moves.emplace(i, j, s, t);
                }
            }
        }
        const Mvp k = knight(d);
        CHECK(k.size() == moves.size());
        CHECK(k.size() == static_cast<std::size_t>(4 * d * (d - 1)));
        for (const auto& [term, coeff] : k) {
            CHECK(coeff == 1.0);
            REQUIRE(term.size() == 2);
            std::set<Power> magnitudes;
            for (const auto& [name, power] : term) magnitudes.insert(std::abs(power));
            CHECK(magnitudes == std::set<Power>{1, 2});
        }
    }
    CHECK(knight(4).size() == 48);
}

TEST_CASE("knight powers are symmetric under inversion") {
    for (int d = 2; d <= 3; ++d) {
        for (int n = 1; n <= 3; ++n) {
            const Mvp k = pow(knight(d), n);
            CHECK(invert(k) == k);
        }
    }
}

TEST_CASE("rmvp respects its bounds and is deterministic") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        RandomSpec spec;
        spec.seed = seed;
        const Mvp p = rmvp(spec);
        CHECK(p.size() <= 5);
        CHECK(p == rmvp(spec));
        for (const auto& [term, coeff] : p) {
            CHECK(coeff >= 1);
            CHECK(coeff <= 5);
            CHECK(coeff == std::floor(coeff));
            for (const auto& [name, power] : term) {
                CHECK(std::set<Symbol>{"a", "b", "c", "d"}.contains(name));
                CHECK(power >= 1);
                CHECK(power <= 4);
            }
        }
    }
    RandomSpec single{1, 1, 1, {"a"}, 123};
    CHECK(render(rmvp(single)) == "a");
    RandomSpec bad;
    bad.terms = 0;
    CHECK_THROWS_AS(rmvp(bad), DomainError);
    CHECK(letters(3) == std::vector<Symbol>{"a", "b", "c"});
}

TEST_CASE("expected distance of a single move") {
    CHECK(expected_distance(knight(2)) == doctest::Approx(std::sqrt(5.0)).epsilon(1e-15));
}

}
