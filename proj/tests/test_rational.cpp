#include <catch2/catch_amalgamated.hpp>

#include "vanish/rational.hpp"

using namespace vanish;

TEST_CASE("parse_rational round trips and canonicalizes") {
    CHECK(parse_rational("-8/3") == Rational(-8, 3));
    CHECK(parse_rational("2") == Rational(2));
    CHECK(parse_rational("4/6") == Rational(2, 3));
    CHECK(parse_rational("1/-2") == Rational(-1, 2));
    CHECK(rational_str(Rational(-8, 3)) == "-8/3");
    CHECK(rational_str(Rational(2)) == "2");
    CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
}

TEST_CASE("floor and ceil of rationals") {
    CHECK(floor_rational(Rational(7, 2)) == 3);
    CHECK(floor_rational(Rational(-7, 2)) == -4);
    CHECK(floor_rational(Rational(4)) == 4);
    CHECK(ceil_rational(Rational(7, 2)) == 4);
    CHECK(ceil_rational(Rational(-7, 2)) == -3);
}

TEST_CASE("isqrt_floor on rationals") {
    CHECK(isqrt_floor(Rational(0)) == 0);
    CHECK(isqrt_floor(Rational(1)) == 1);
    CHECK(isqrt_floor(Rational(99, 100)) == 0);
    CHECK(isqrt_floor(Rational(100, 4)) == 5);
    CHECK(isqrt_floor(Rational(1000000, 2771)) == 18);
    CHECK(isqrt_floor(Rational(400, 2771)) == 0);
}

TEST_CASE("floor_log decides exact powers") {
    CHECK(floor_log(17, Rational(20)) == 1);
    CHECK(floor_log(17, Rational(288)) == 1);
    CHECK(floor_log(17, Rational(289)) == 2);  // exact power: tie decided
    CHECK(floor_log(17, Rational(1000000)) == 4);
    CHECK(floor_log(2, Rational(1)) == 0);
}

TEST_CASE("binomial and factorial") {
    CHECK(factorial(5) == 120);
    CHECK(binomial(10, 5) == 252);
    CHECK(binomial(4, 0) == 1);
    CHECK(binomial(3, 5) == 0);
}

TEST_CASE("pow_rational handles negative exponents") {
    CHECK(pow_rational(Rational(2, 3), 3) == Rational(8, 27));
    CHECK(pow_rational(Rational(2, 3), -2) == Rational(9, 4));
    CHECK(pow_rational(Rational(5), 0) == 1);
}
