#include <doctest.h>

#include "gsq/error.hpp"
#include "gsq/rational.hpp"

using namespace gsq;

TEST_SUITE("rational") {

TEST_CASE("plain form keeps the denominator") {
    CHECK(to_string(Rational(2)) == "2/1");
    CHECK(to_string(Rational(6, 4)) == "3/2");
    CHECK(to_string(Rational(-1, 3)) == "-1/3");
}

TEST_CASE("mixed form") {
    CHECK(to_mixed_string(Rational(18, 7)) == "2+4/7");
    CHECK(to_mixed_string(Rational(5, 2)) == "2+1/2");
    CHECK(to_mixed_string(Rational(3)) == "3");
    CHECK(to_mixed_string(Rational(1, 3)) == "1/3");
}

TEST_CASE("parse") {
    CHECK(parse_rational("12/29") == Rational(12, 29));
    CHECK(parse_rational("-4") == Rational(-4));
    CHECK(parse_rational(to_string(Rational(70, 29))) == Rational(70, 29));
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("x"), Error);
    CHECK_THROWS_AS(parse_rational("1/2/3"), Error);
}

}
