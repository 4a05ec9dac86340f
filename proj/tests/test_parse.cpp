#include <doctest.h>

#include "helpers.hpp"

using namespace gabfield;
using namespace testhelpers;

TEST_CASE("ratfunc grammar") {
    auto ctx = f16();
    RatFunc a = parse_ratfunc("(β^3*x + β^10)/(x + β^5)", *ctx);
    CHECK(a.num().degree() == 1);
    CHECK(a.den().degree() == 1);
    CHECK(parse_ratfunc("x", *ctx) == RatFunc::x_power(*ctx, 1));
    CHECK(parse_ratfunc(" x ^ 3 ", *ctx) == RatFunc::x_power(*ctx, 3));
    CHECK(parse_ratfunc("1/x", *ctx) == RatFunc::x_power(*ctx, 1).inverse());
    auto p5 = f5();
    RatFunc b = parse_ratfunc("(3*x^3 + x + 3)/(x^2 + 4*x + 3)", *p5);
    CHECK(b.num().degree() == 3);
    CHECK(parse_ratfunc("-x + x", *p5).is_zero());
    CHECK(parse_ratfunc("2^3", *p5) == parse_ratfunc("3", *p5));
}

TEST_CASE("ratfunc errors") {
    auto ctx = f16();
    CHECK_THROWS_AS(parse_ratfunc("x +", *ctx), ParseError);
    CHECK_THROWS_AS(parse_ratfunc("(x", *ctx), ParseError);
    CHECK_THROWS_AS(parse_ratfunc("x/(x + x)", *ctx), ParseError);  // zero denominator literal
    CHECK_THROWS_AS(parse_ratfunc("y", *ctx), ParseError);
    CHECK_THROWS_AS(parse_ratfunc("z", *ctx), ParseError);
    CHECK_THROWS_AS(parse_ratfunc("x^^2", *ctx), ParseError);
}

TEST_CASE("L-element grammar") {
    auto ext = kummer_ext();
    LElement e = parse_lelement("y^4", *ext);
    CHECK(e == ext->y_power(4));
    for (std::uint32_t j = 0; j < 5; ++j) CHECK(e.coord(j).is_zero() == (j != 4));

    LElement m1 = parse_lelement(
        "(β^3*x + β^10)/(x + β^5)*y^4 + (β^5*x + β^2)/(x + β^4)*y^3 + "
        "(β^6*x + β^13)/(x + β^3)*y^2 + (β^10*x + β^6)/(x + β^9)*y + (β*x + β^12)/(x + 1)",
        *ext);
    CHECK(m1.coord(4) == parse_ratfunc("(β^3*x + β^10)/(x + β^5)", *f16()));
    CHECK(m1.coord(0) == parse_ratfunc("(β*x + β^12)/(x + 1)", *f16()));

    auto as = artin_schreier_ext();
    LElement m2 = parse_lelement(
        "(3*x + 2)*y^4 + (4*x + 3)/(x)*y^3 + 1/(x + 2)*y^2 + (2*x + 1)*y + 1", *as);
    CHECK(m2.coord(4) == parse_ratfunc("3*x + 2", *f5()));
    CHECK(m2.coord(2) == parse_ratfunc("1/(x + 2)", *f5()));

    // y-powers at or above n are grammar errors even though they reduce
    CHECK_THROWS_AS(parse_lelement("y^5", *ext), ParseError);
    CHECK_THROWS_AS(parse_lelement("y^7 + 1", *as), ParseError);
}

TEST_CASE("terms with equal y-power fold together") {
    auto ext = artin_schreier_ext();
    CHECK(parse_lelement("y + y + y + y + y", *ext).is_zero());  // char 5
    CHECK(parse_lelement("x*y^2 + y^2", *ext) ==
          ext->from_scalar(parse_ratfunc("x + 1", *f5())) * ext->y_power(2));
}

TEST_CASE("printing round-trips through the parser") {
    Rng rng(0x90a8);
    for (auto ext : {kummer_ext(), artin_schreier_ext()}) {
        for (int i = 0; i < 200; ++i) {
            LElement e = random_lelement(*ext, 3, rng);
            CHECK(parse_lelement(e.to_string(), *ext) == e);
        }
        CHECK(parse_lelement("0", *ext).is_zero());
        CHECK(ext->zero().to_string() == "0");
        CHECK(ext->one().to_string() == "1");
        CHECK(ext->y_power(1).to_string() == "y");
    }
    // polynomial coefficients print without needless parentheses
    auto as = artin_schreier_ext();
    LElement e = parse_lelement("(4*x + 4)*y^2 + (x + 2)/(x)*y + 3", *as);
    CHECK(e.to_string() == "(4*x + 4)*y^2 + (x + 2)/(x)*y + 3");
    LElement mono = parse_lelement("4*x*y^2", *as);
    CHECK(mono.to_string() == "4*x*y^2");
}
