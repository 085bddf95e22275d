#include "vpgmis/rational.hpp"

#include <doctest.h>

using namespace vpgmis;

TEST_CASE("to_string canonical forms") {
    CHECK(to_string(Rational(0)) == "0");
    CHECK(to_string(Rational(42)) == "42");
    CHECK(to_string(Rational(-7)) == "-7");
    CHECK(to_string(Rational(1, 2)) == "1/2");
    CHECK(to_string(Rational(-3, 4)) == "-3/4");
    CHECK(to_string(Rational(6, 4)) == "3/2");              // reduced
    CHECK(to_string(Rational(5) / Rational(-10)) == "-1/2");  // sign on numerator
}

TEST_CASE("parse integers and fractions") {
    CHECK(parse_rational("0") == Rational(0));
    CHECK(parse_rational("17") == Rational(17));
    CHECK(parse_rational("-17") == Rational(-17));
    CHECK(parse_rational("+17") == Rational(17));
    CHECK(parse_rational("5/2") == Rational(5, 2));
    CHECK(parse_rational("-5/2") == Rational(-5, 2));
    CHECK(parse_rational("10/4") == Rational(5, 2));
    CHECK(parse_rational("123456789012345678901234567890") ==
          Rational(BigInt("123456789012345678901234567890")));
}

TEST_CASE("parse decimals exactly") {
    CHECK(parse_rational("0.5") == Rational(1, 2));
    CHECK(parse_rational("-12.5e-3") == Rational(-1, 80));
    CHECK(parse_rational("2.50") == Rational(5, 2));
    CHECK(parse_rational("1e3") == Rational(1000));
    CHECK(parse_rational("1.25E2") == Rational(125));
    CHECK(parse_rational(".5") == Rational(1, 2));
    CHECK(parse_rational("3.") == Rational(3));
    CHECK(parse_rational("0.1") == Rational(1, 10));
}

TEST_CASE("parse rejects garbage") {
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("//"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1.2.3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1e"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("5 / 2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1e999999999"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1e-999999999"), std::invalid_argument);
}

TEST_CASE("round trip through to_string") {
    const Rational samples[] = {Rational(0),      Rational(7),  Rational(-7),
                                Rational(22, 7),  Rational(-1, 3),
                                Rational(100, 9), Rational(1, 1000000007)};
    for (const auto& r : samples) CHECK(parse_rational(to_string(r)) == r);
}

TEST_CASE("to_double on representable values") {
    CHECK(to_double(Rational(1, 2)) == 0.5);
    CHECK(to_double(Rational(5, 2)) == 2.5);
    CHECK(to_double(Rational(-3)) == -3.0);
}
