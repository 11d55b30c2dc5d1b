#include <doctest.h>

#include "pte/rational.hpp"

using pte::Rational;

TEST_CASE("rationals are stored in canonical reduced form") {
  CHECK(Rational(6, 8) == Rational(3, 4));
  CHECK(Rational(-6, 8) == Rational(-3, 4));
  CHECK(Rational(6, -8) == Rational(-3, 4));
  CHECK(Rational(-6, -8) == Rational(3, 4));
  CHECK(Rational(0, 5) == Rational(0));
  CHECK(Rational(7, 1).numerator() == 7);
  CHECK(Rational(7, 1).denominator() == 1);
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("ordering is exact and total") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, 3) <= Rational(1, 3));
  CHECK(Rational(5) > Rational(4));
  // Values whose difference is far below double precision stay distinct.
  const Rational a(1000000000000000000LL, 999999999999999999LL);
  const Rational b(1000000000000000001LL, 1000000000000000000LL);
  CHECK(a != b);
  CHECK((a < b || b < a));
}

TEST_CASE("arithmetic is exact") {
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
  CHECK(-Rational(3, 7) == Rational(-3, 7));
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("parsing covers integers, fractions and exact decimals") {
  CHECK(Rational::parse("3") == Rational(3));
  CHECK(Rational::parse("-7") == Rational(-7));
  CHECK(Rational::parse("3/4") == Rational(3, 4));
  CHECK(Rational::parse("-3/4") == Rational(-3, 4));
  CHECK(Rational::parse("1.375") == Rational(11, 8));
  CHECK(Rational::parse("-0.5") == Rational(-1, 2));
  CHECK(Rational::parse("1.7") == Rational(17, 10));
  CHECK(Rational::parse("0.750") == Rational(3, 4));
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1.2.3"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1 2"), std::invalid_argument);
}

TEST_CASE("canonical text uses exact decimals where they terminate") {
  CHECK(Rational(11, 8).str() == "1.375");
  CHECK(Rational(-11, 8).str() == "-1.375");
  CHECK(Rational(17, 10).str() == "1.7");
  CHECK(Rational(3).str() == "3");
  CHECK(Rational(1, 3).str() == "1/3");
  CHECK(Rational(-5, 7).str() == "-5/7");
  CHECK(Rational(1, 2).str() == "0.5");
}

TEST_CASE("text round-trips through parse") {
  const Rational values[] = {Rational(0),     Rational(3),      Rational(-3),     Rational(11, 8),
                             Rational(1, 3),  Rational(-5, 7),  Rational(17, 10), Rational(1001000),
                             Rational(1, 64), Rational(123, 40)};
  for (const Rational& r : values) CHECK(Rational::parse(r.str()) == r);
}
