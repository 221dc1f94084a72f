#include "racah/rational.hpp"

#include <doctest.h>

using racah::Rat;

TEST_CASE("rationals are canonical") {
    CHECK(Rat(2, 4) == Rat(1, 2));
    CHECK(Rat(2, 4).num() == 1);
    CHECK(Rat(2, 4).den() == 2);
    CHECK(Rat(3, -6) == Rat(-1, 2));
    CHECK(Rat(3, -6).den() == 2);
    CHECK(Rat(0, 7).str() == "0");
    CHECK(Rat(-10, 5).str() == "-2");
}

TEST_CASE("parsing and printing round-trip") {
    CHECK(Rat::parse("7") == Rat(7));
    CHECK(Rat::parse("-1/2") == Rat(-1, 2));
    CHECK(Rat::parse("4/6") == Rat(2, 3));
    CHECK(Rat::parse("4/6").str() == "2/3");
    CHECK(Rat::parse("-1/2").str() == "-1/2");
    CHECK_THROWS_AS(Rat::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse("a/2"), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse("1/ 2"), std::invalid_argument);
}

TEST_CASE("arithmetic is exact") {
    const Rat x(1, 3), y(1, 6);
    CHECK(x + y == Rat(1, 2));
    CHECK(x - y == Rat(1, 6));
    CHECK(x * y == Rat(1, 18));
    CHECK(x / y == Rat(2));
    CHECK(-x == Rat(-1, 3));
    CHECK_THROWS_AS(x / Rat(0), std::domain_error);
    CHECK(Rat(1, 3) + Rat(1, 3) + Rat(1, 3) == Rat(1));
}

TEST_CASE("ordering") {
    CHECK(Rat(-1) < Rat(-1, 2));
    CHECK(Rat(1, 3) < Rat(1, 2));
    CHECK(racah::abs(Rat(-5, 2)) == Rat(5, 2));
}

TEST_CASE("exact square roots") {
    CHECK(*racah::exact_sqrt(Rat(25, 16)) == Rat(5, 4));
    CHECK(*racah::exact_sqrt(Rat(0)) == Rat(0));
    CHECK(*racah::exact_sqrt(Rat(49)) == Rat(7));
    CHECK(!racah::exact_sqrt(Rat(2)).has_value());
    CHECK(!racah::exact_sqrt(Rat(1, 3)).has_value());
    CHECK(!racah::exact_sqrt(Rat(-4)).has_value());
}
