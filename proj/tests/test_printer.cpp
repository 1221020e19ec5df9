#include "doctest.h"
#include "mvp/all.hpp"

using namespace mvp;

TEST_SUITE("printer") {

TEST_CASE("canonical rendering") {
    const Mvp m = parse("3 stoat goat^6 -4 + 7 stoatboat^3 bloat -9 float boat goat gloat^6");
    CHECK(render(m) == "-4 + 7 bloat stoatboat^3 - 9 boat float gloat^6 goat + 3 goat^6 stoat");
    CHECK(render(Mvp{}) == "0");
    CHECK(render(Mvp(875.0)) == "875");
    CHECK(render(Mvp(-1.0)) == "-1");
    CHECK(render(parse("-x + 1")) == "1 - x");
    CHECK(render(parse("-x")) == "-x");
    CHECK(render(parse("x^-2 y")) == "x^-2 y");
}

TEST_CASE("number formatting") {
    CHECK(format_number(12528) == "12528");
    CHECK(format_number(-3) == "-3");
    CHECK(format_number(1.0 / 24) == "0.04166667");
    CHECK(format_number(1.0 / 120) == "0.008333333");
    CHECK(format_number(-1.0 / 6) == "-0.1666667");
    CHECK(format_number(0.000025) == "0.000025");
    CHECK(format_number(-2.583333333e-06) == "-0.000002583333");
    CHECK(format_number(4.2481827383) == "4.248183");
    CHECK(format_number(1e20) == "100000000000000000000");
    CHECK(format_number(0.1, 0) == "0.1");
    CHECK(format_number(1.0 / 3, 0) == "0.3333333333333333");
    CHECK(format_number(0.0) == "0");
}

TEST_CASE("lex order with a varorder") {
    const Mvp p = parse("3 x^2 + y^3 x + 1 + y");
    RenderOptions lex;
    lex.order = Order::lex;
    CHECK(render(p, lex) == "3 x^2 + x y^3 + y + 1");
    lex.varorder = {"y", "x"};
    CHECK(render(p, lex) == "y^3 x + y + 3 x^2 + 1");
    lex.varorder = {"y"};
    CHECK_THROWS_AS(render(p, lex), DomainError);
    lex.varorder = {"z", "y", "x"};
    CHECK(render(p, lex) == "y^3 x + y + 3 x^2 + 1");
}

TEST_CASE("rendering is repeatable and parseable") {
    const Mvp p = parse("0.1 x - 2.5 y^-3 z + 7");
    const std::string once = render(p);
    CHECK(once == render(p));
    CHECK(parse(once) == p);
    RenderOptions lex;
    lex.order = Order::lex;
    CHECK(parse(render(p, lex)) == p);
}

TEST_CASE("seven digits is lossy, exact digits is not") {
    const Mvp p = Mvp::monomial(Term::variable("x"), 1.0 / 3);
    CHECK(render(p) == "0.3333333 x");
    CHECK(parse(render(p)) != p);
    RenderOptions exact;
    exact.digits = 0;
    CHECK(parse(render(p, exact)) == p);
}

}
