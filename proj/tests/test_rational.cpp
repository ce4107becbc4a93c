#include <doctest.h>

#include <vector>

#include "n2sc/rational.hpp"

using n2sc::Rational;

TEST_CASE("construction reduces to lowest terms with positive denominator") {
    CHECK(Rational(30, 12) == Rational(5, 2));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(-4, -6) == Rational(2, 3));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(0, 7).den() == 1);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("arithmetic") {
    CHECK(Rational(1, 2) + Rational(3, 2) == Rational(2));
    CHECK(Rational(1, 2) - Rational(3, 2) == Rational(-1));
    CHECK(Rational(1, 2) * Rational(3, 2) == Rational(3, 4));
    CHECK(Rational(1, 2) / Rational(3, 2) == Rational(1, 3));
    CHECK(-Rational(5, 3) == Rational(-5, 3));
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("floor and mod_one") {
    CHECK(Rational(7, 2).floor() == 3);
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(6, 3).floor() == 2);
    CHECK(Rational(-1, 3).mod_one() == Rational(2, 3));
    CHECK(Rational(-11, 6).mod_one() == Rational(1, 6));
    CHECK(Rational(5, 2).mod_one() == Rational(1, 2));
    CHECK(Rational(-3).mod_one() == Rational(0));
}

TEST_CASE("ordering") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(7, 3) > Rational(2));
}

TEST_CASE("string forms") {
    CHECK(Rational(5, 2).str() == "5/2");
    CHECK(Rational(-3).str() == "-3");
    CHECK(Rational(0).str() == "0");
}

TEST_CASE("parse_rational") {
    CHECK(*n2sc::parse_rational("5/2") == Rational(5, 2));
    CHECK(*n2sc::parse_rational("-3") == Rational(-3));
    CHECK(*n2sc::parse_rational("2/4") == Rational(1, 2));
    CHECK(*n2sc::parse_rational("-1/3") == Rational(-1, 3));
    CHECK(!n2sc::parse_rational("x"));
    CHECK(!n2sc::parse_rational("1/0"));
    CHECK(!n2sc::parse_rational("1.5"));
    CHECK(!n2sc::parse_rational(""));
    CHECK(!n2sc::parse_rational("1/2/3"));
}

TEST_CASE("field axioms on a small grid") {
    std::vector<Rational> vals;
    for (long long p = -6; p <= 6; ++p)
        for (long long q = 1; q <= 4; ++q) vals.emplace_back(p, q);
    for (const auto& a : vals)
        for (const auto& b : vals) {
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK(a - b == -(b - a));
            CHECK((a + b) - b == a);
            if (!b.is_zero()) CHECK((a / b) * b == a);
        }
}
