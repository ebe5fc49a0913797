#include "clos/rational.hpp"

#include <stdexcept>

#include "doctest.h"

using clos::Rational;

TEST_CASE("rationals normalize to lowest terms with positive denominator") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, 4) == Rational(-1, 2));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(0, 7).den() == 1);
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("arithmetic is exact") {
  Rational half(1, 2);
  Rational third(1, 3);
  CHECK(half + third == Rational(5, 6));
  CHECK(half - third == Rational(1, 6));
  CHECK(half * third == Rational(1, 6));
  CHECK(half / third == Rational(3, 2));
  CHECK(Rational(9, 5) * Rational(3, 2) == Rational(27, 10));
  CHECK(-half == Rational(-1, 2));
}

TEST_CASE("comparison is by value") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(7, 4) < Rational(9, 5));
  CHECK(Rational(2, 1) > Rational(9, 5));
  CHECK(clos::max(Rational(1, 2), Rational(3, 4)) == Rational(3, 4));
  CHECK(clos::min(Rational(1, 2), Rational(3, 4)) == Rational(1, 2));
}

TEST_CASE("parse and print round-trip") {
  CHECK(Rational::parse("3/2") == Rational(3, 2));
  CHECK(Rational::parse("-3/6") == Rational(-1, 2));
  CHECK(Rational::parse("5") == Rational(5));
  CHECK(Rational(3, 2).str() == "3/2");
  CHECK(Rational(1).str() == "1/1");
  CHECK(Rational::parse(Rational(7, 4).str()) == Rational(7, 4));
  CHECK_THROWS(Rational::parse("a/b"));
  CHECK_THROWS(Rational::parse(""));
  CHECK_THROWS(Rational::parse("1/"));
}

TEST_CASE("overflow throws instead of wrapping") {
  Rational big(INT64_MAX, 1);
  CHECK_THROWS_AS(big * Rational(2), std::overflow_error);
  CHECK_THROWS_AS(big + Rational(1), std::overflow_error);
  CHECK(big * Rational(1, INT64_MAX) == Rational(1));
}
