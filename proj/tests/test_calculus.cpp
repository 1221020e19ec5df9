#include <random>

#include "doctest.h"
#include "mvp/all.hpp"
#include "oracle/random.hpp"

using namespace mvp;

namespace {

const char* s_text = "a + 5 a^5*b^2*c^8 - 3 x^2 a^3 b c^3";

}  // namespace

TEST_SUITE("calculus") {

TEST_CASE("deriv") {
    const Mvp s = parse(s_text);
    CHECK(render(s) == "a - 3 a^3 b c^3 x^2 + 5 a^5 b^2 c^8");
    CHECK(render(deriv(s, {"a", "b", "c"})) == "-27 a^2 c^2 x^2 + 400 a^4 b c^7");
    CHECK(deriv(s, {"c", "b", "a"}) == deriv(s, {"a", "b", "c"}));
    CHECK(render(deriv(parse("x^-2"), {"x"})) == "-2 x^-3");
    CHECK(deriv(Mvp(5.0), {"x"}).is_zero());
    CHECK(deriv(s, {"q"}).is_zero());
    const std::vector<Symbol> none;
    CHECK(deriv(s, none) == s);
}

TEST_CASE("aderiv") {
    const Mvp s = parse(s_text);
    CHECK(render(aderiv(s, {{"a", 3}, {"b", 1}, {"c", 2}})) == "33600 a^2 b c^6 - 108 c x^2");
    CHECK(aderiv(s, {{"x", 0}}) == s);
    CHECK_THROWS_AS(aderiv(s, {{"x", -1}}), DomainError);
}

TEST_CASE("aderiv equals repeated deriv") {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 20; ++t) {
        const Mvp p = oracle::random_mvp(rng);
        CHECK(aderiv(p, {{"a", 2}, {"b", 1}}) == deriv(p, {"a", "a", "b"}));
        CHECK(aderiv(p, {{"c", 3}}) == deriv(p, {"c", "c", "c"}));
    }
}

TEST_CASE("horner") {
    const std::vector<double> sin5{0, 1, 0, -1.0 / 6, 0, 1.0 / 120};
    const Mvp sinxpy = horner("x+y", sin5);
    CHECK(sinxpy.size() == 12);
    CHECK(render(sinxpy) ==
          "x - 0.5 x y^2 + 0.04166667 x y^4 - 0.5 x^2 y + 0.08333333 x^2 y^3 - 0.1666667 x^3 + "
          "0.08333333 x^3 y^2 + 0.04166667 x^4 y + 0.008333333 x^5 + y - 0.1666667 y^3 + 0.008333333 y^5");

    const std::vector<double> only{2.5};
    CHECK(horner("x", only) == Mvp(2.5));
    const std::vector<double> abc{1, 2, 3};
    CHECK(render(horner("x", abc)) == "1 + 2 x + 3 x^2");
    CHECK_THROWS_AS(horner("x", std::vector<double>{}), DomainError);
    CHECK_THROWS_AS(horner("x +", abc), ParseError);
}

TEST_CASE("horner matches the naive power sum") {
    std::mt19937_64 rng(32);
    std::uniform_int_distribution<int> coeff(-5, 5);
    std::uniform_int_distribution<int> length(1, 5);
    for (int t = 0; t < 100; ++t) {
        const Mvp base = oracle::random_mvp(rng, {3, -2, 2, 3, false});
        std::vector<double> cs(static_cast<std::size_t>(length(rng)));
        for (auto& c : cs) c = coeff(rng);
        Mvp naive;
        for (std::size_t i = 0; i < cs.size(); ++i) naive = naive + pow(base, static_cast<std::int64_t>(i)) * cs[i];
        CHECK(horner(base, cs) == naive);
    }
}

TEST_CASE("derivative of a constant is zero") {
    std::uniform_real_distribution<double> value(-100, 100);
    std::mt19937_64 rng(33);
    for (int t = 0; t < 20; ++t) CHECK(deriv(Mvp(value(rng)), {"a"}).is_zero());
}

}
