#include "bds/rational.hpp"

#include "doctest.h"

using bds::Rational;

TEST_CASE("rational arithmetic and normalization") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) * Rational(2, 3) == Rational(1, 3));
  CHECK(Rational(1) / Rational(3) == Rational(1, 3));
  CHECK(Rational(7, 2).floor() == 3);
  CHECK(Rational(7, 2).ceil() == 4);
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(-7, 2).ceil() == -3);
  CHECK(Rational(6, 3).ceil() == 2);
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK_THROWS_AS(Rational(1, 0), bds::input_error);
}

TEST_CASE("rational parsing") {
  CHECK(Rational::parse("3") == Rational(3));
  CHECK(Rational::parse("-3") == Rational(-3));
  CHECK(Rational::parse("1/2") == Rational(1, 2));
  CHECK(Rational::parse("0.25") == Rational(1, 4));
  CHECK(Rational::parse("-0.5") == Rational(-1, 2));
  CHECK(Rational::parse("2/4") == Rational(1, 2));
  CHECK_THROWS_AS(Rational::parse("abc"), bds::input_error);
  CHECK_THROWS_AS(Rational::parse(""), bds::input_error);
  CHECK_THROWS_AS(Rational::parse("1/0"), bds::input_error);
}

TEST_CASE("formatting") {
  CHECK(Rational(1, 2).str() == "1/2");
  CHECK(Rational(4).str() == "4");
  CHECK(Rational(4, 2).str() == "2");
}

TEST_CASE("no floating point drift in threshold formulas") {
  // 5*(5/(1/3)+1)*2*1 = 160 exactly; double arithmetic rounds this up to 161.
  Rational eps(1, 3);
  CHECK((Rational(5) * (Rational(5) / eps + 1) * 2 * 1).ceil() == 160);
}
