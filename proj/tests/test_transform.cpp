#include <random>

#include "doctest.h"
#include "mvp/all.hpp"
#include "oracle/random.hpp"

using namespace mvp;

namespace {

const char* s3_text = "x + 5 x^4 y + 8 y^2 x z^3";

Mvp subs_mvp(const Mvp& p, std::vector<Binding> b) { return substitute(p, b); }

}  // namespace

TEST_SUITE("transform") {

TEST_CASE("numeric substitution") {
    const Mvp s3 = parse(s3_text);
    CHECK(render(s3) == "x + 8 x y^2 z^3 + 5 x^4 y");
    CHECK(render(subs_mvp(s3, {{"x", 1}})) == "1 + 5 y + 8 y^2 z^3");

    const std::vector<Binding> all{{"x", 1}, {"y", 2}, {"z", 3}};
    const SubsResult scalar = subs(s3, all);
    REQUIRE(std::holds_alternative<double>(scalar));
    CHECK(std::get<double>(scalar) == 875);

    const SubsResult kept = subs(s3, all, false);
    REQUIRE(std::holds_alternative<Mvp>(kept));
    CHECK(render(std::get<Mvp>(kept)) == "875");

    const std::vector<Binding> partial{{"x", 1}};
    CHECK(std::holds_alternative<Mvp>(subs(s3, partial)));
}

TEST_CASE("polynomial substitution depends on order") {
    const Mvp abc = parse_or_lift("a+b+c");
    CHECK(render(subs_mvp(abc, {{"a", "x^6"}})) == "b + c + x^6");
    CHECK(render(subs_mvp(abc, {{"a", "x^6"}, {"x", "1+a"}})) ==
          "1 + 6 a + 15 a^2 + 20 a^3 + 15 a^4 + 6 a^5 + a^6 + b + c");
    CHECK(render(subs_mvp(abc, {{"x", "1+a"}, {"a", "x^6"}})) == "b + c + x^6");
}

TEST_CASE("repeated symbols in a binding list apply in sequence") {
    CHECK(subs_mvp(parse("x"), {{"x", "x + 1"}, {"x", "x + 1"}}) == parse("x + 2"));
    CHECK(subs_mvp(parse("x y"), {{"q", 4}}) == parse("x y"));
}

TEST_CASE("negative powers") {
    CHECK(subs_mvp(parse("x^-2 y"), {{"x", 2}}) == parse("0.25 y"));
    CHECK_THROWS_AS(subs_mvp(parse("x^-2 y"), {{"x", 0}}), DomainError);
    CHECK_THROWS_AS(subs_mvp(parse("x^-1"), {{"x", "1 + y"}}), DomainError);
    CHECK(subs_mvp(parse("x^2 + 3"), {{"x", 0}}) == Mvp(3.0));
    CHECK_THROWS_AS(subs_mvp(parse("x"), {{"1x", 0}}), DomainError);
}

TEST_CASE("subvec") {
    const Mvp p = parse("3 a c + 6 a^2 b^2 + 8 a^2 c^2 + 4 a^4");
    const auto v = subvec(p, {{"a", {1}}, {"b", {2}}, {"c", {1, 2, 3, 4, 5}}});
    CHECK(v == std::vector<double>{39, 66, 109, 168, 243});

    CHECK(subvec(Mvp(7.0), {{"z", {1, 2, 3}}}) == std::vector<double>{7, 7, 7});
    CHECK(subvec(Mvp(7.0), {}) == std::vector<double>{7});
    CHECK(subvec(parse("x^-1"), {{"x", {2, 4}}}) == std::vector<double>{0.5, 0.25});

    CHECK_THROWS_AS(subvec(p, {{"a", {1}}, {"b", {2}}}), DomainError);
    CHECK_THROWS_AS(subvec(p, {{"a", {1, 2}}, {"b", {2}}, {"c", {1, 2, 3}}}), DomainError);
    CHECK_THROWS_AS(subvec(p, {{"a", {}}, {"b", {2}}, {"c", {1}}}), DomainError);
    CHECK_THROWS_AS(subvec(parse("x^-1"), {{"x", {1, 0}}}), DomainError);
    CHECK_THROWS_AS(subvec(parse("x^-1"), {{"x", {1, 0}}}, Execution::parallel), DomainError);
}

TEST_CASE("serial and parallel evaluation agree") {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> value(-2.0, 2.0);
    for (int t = 0; t < 50; ++t) {
        const Mvp p = oracle::random_polynomial(rng);
        std::map<Symbol, std::vector<double>> columns;
        for (const auto& s : oracle::small_alphabet()) {
            auto& col = columns[s];
            for (int i = 0; i < 257; ++i) col.push_back(value(rng));
        }
        CHECK(subvec(p, columns, Execution::serial) == subvec(p, columns, Execution::parallel));
    }
}

TEST_CASE("single-point subvec agrees with subs") {
    std::mt19937_64 rng(22);
    std::uniform_int_distribution<int> value(-4, 4);
    for (int t = 0; t < 20; ++t) {
        const Mvp p = oracle::random_polynomial(rng);
        std::vector<Binding> bindings;
        std::map<Symbol, std::vector<double>> columns;
        for (const auto& s : oracle::small_alphabet()) {
            const double v = value(rng);
            bindings.emplace_back(s, v);
            columns[s] = {v};
        }
        const SubsResult r = subs(p, bindings);
        REQUIRE(std::holds_alternative<double>(r));
        CHECK(std::get<double>(r) == subvec(p, columns)[0]);
    }
}

TEST_CASE("invert") {
    CHECK(render(invert(parse("1+x+x^2 y"))) == "1 + x^-2 y^-1 + x^-1");
    CHECK(invert(Mvp(4.0)) == Mvp(4.0));
    std::mt19937_64 rng(23);
    for (int t = 0; t < 100; ++t) {
        const Mvp p = oracle::random_mvp(rng);
        CHECK(invert(invert(p)) == p);
    }
}

}
