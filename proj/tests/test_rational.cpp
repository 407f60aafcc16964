#include "rbsep/rational.hpp"

#include <doctest.h>

using namespace rbsep;

TEST_CASE("rationals stay in lowest terms with positive denominator") {
  Rational r(2, 4);
  CHECK(numerator(r) == 1);
  CHECK(denominator(r) == 2);
  Rational s = Rational(3) / Rational(-6);
  CHECK(numerator(s) == -1);
  CHECK(denominator(s) == 2);
  CHECK(Rational(0, 7) == 0);
  CHECK(denominator(Rational(0, 7)) == 1);
}

TEST_CASE("arithmetic is exact") {
  Rational third(1, 3), sixth(1, 6);
  CHECK(third + sixth == Rational(1, 2));
  CHECK(third - sixth == sixth);
  CHECK(third * sixth == Rational(1, 18));
  CHECK(third / sixth == 2);
}

TEST_CASE("parse_rational accepts integers, fractions and decimals") {
  CHECK(*parse_rational("12") == 12);
  CHECK(*parse_rational("-3/4") == Rational(-3, 4));
  CHECK(*parse_rational("2.125") == Rational(17, 8));
  CHECK(*parse_rational("-.5") == Rational(-1, 2));
  CHECK(*parse_rational("1/3") == Rational(1, 3));
  CHECK(!parse_rational("1/0").has_value());
  CHECK(!parse_rational("abc").has_value());
  CHECK(!parse_rational("1.2.3").has_value());
  CHECK(!parse_rational("").has_value());
}

TEST_CASE("to_string is canonical and round-trips") {
  CHECK(to_string(Rational(5)) == "5");
  CHECK(to_string(Rational(-7, 2)) == "-7/2");
  CHECK(*parse_rational(to_string(Rational(22, 7))) == Rational(22, 7));
}

TEST_CASE("floor and ceil") {
  CHECK(floor_to_int(Rational(7, 2)) == 3);
  CHECK(ceil_to_int(Rational(7, 2)) == 4);
  CHECK(floor_to_int(Rational(-7, 2)) == -4);
  CHECK(ceil_to_int(Rational(-7, 2)) == -3);
  CHECK(floor_to_int(Rational(4)) == 4);
  CHECK(ceil_to_int(Rational(4)) == 4);
}

TEST_CASE("pow_rational handles negative exponents") {
  CHECK(pow_rational(Rational(2), 10) == 1024);
  CHECK(pow_rational(Rational(3, 2), -2) == Rational(4, 9));
  CHECK(pow_rational(Rational(5), 0) == 1);
}
