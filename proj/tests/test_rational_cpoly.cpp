#include <doctest.h>

#include "spbw/cpoly.hpp"

using namespace spbw;

TEST_CASE("rational arithmetic and parsing") {
    CHECK(Rational::parse("2/3") + Rational::parse("1/3") == Rational(1));
    CHECK(Rational::parse("-4/6") == Rational(-2, 3));
    CHECK(Rational(2, 3).inverse() == Rational(3, 2));
    CHECK((Rational(1, 2) * Rational(4)) == Rational(2));
    CHECK(Rational(0).is_zero());
    CHECK_THROWS_AS(Rational(1, 0), Error);
    CHECK_THROWS_AS(Rational(0).inverse(), Error);
    CHECK(Rational(-5).str() == "-5");
    CHECK(Rational(7, 2).str() == "7/2");
}

TEST_CASE("cpoly canonical form") {
    CPoly p = CPoly::from_terms(2, {{{1, 2}, Rational(1)},
                                    {{1, 2}, Rational(2)},
                                    {{0, 0}, Rational(0)}});
    CHECK(p.terms().size() == 1);
    CHECK(p.lead_coeff() == Rational(3));
    CHECK(p.degree() == 3);

    CPoly zero = p - p;
    CHECK(zero.is_zero());
    CHECK(zero.degree() == -1);
}

TEST_CASE("cpoly product and substitution") {
    CPoly x = CPoly::generator(2, 0);
    CPoly y = CPoly::generator(2, 1);
    CPoly p = (x + y) * (x - y);
    CHECK(p == x * x - y * y);

    CPoly img = p.substitute({y.scaled(Rational(2)), y});
    CHECK(img == (y * y).scaled(Rational(3)));
}

TEST_CASE("cpoly printing") {
    CPoly x = CPoly::generator(2, 0);
    CPoly y = CPoly::generator(2, 1);
    CPoly p = x * x - y.scaled(Rational(1, 2)) + CPoly::constant(2, Rational(3));
    CHECK(p.str({"x", "y"}) == "x^2 - 1/2*y + 3");
    CHECK(CPoly(2).str({"x", "y"}) == "0");
}
