#include <doctest.h>

#include "grsum/error.hpp"
#include "helpers.hpp"

using namespace grsum;

TEST_CASE("Rational canonical form and rendering") {
    CHECK(Rational(Integer(2), Integer(-12)).str() == "-1/6");
    CHECK(Rational(Integer(12), Integer(4)).str() == "3");
    CHECK(R("0").str() == "0");
    CHECK(R("-4/8") == R("-1/2"));
    CHECK(R("6/3").is_integer());
    CHECK(R("1/3") < R("1/2"));
    CHECK((R("1/3") + R("1/6")) == R("1/2"));
    CHECK((R("1/3") / R("-2")).str() == "-1/6");
}

TEST_CASE("Rational rejects bad input") {
    CHECK_THROWS_AS(R("1/0"), InvalidArgument);
    CHECK_THROWS_AS(R("abc"), InvalidArgument);
    CHECK_THROWS_AS(R("1") / R("0"), InvalidArgument);
}

TEST_CASE("Rational keeps big integers exact") {
    const Rational big = R("123456789012345678901234567890/7");
    CHECK((big * Rational(7)).str() == "123456789012345678901234567890");
}
