#include <doctest.h>

#include <sstream>
#include <stdexcept>

#include "ultra/rational.hpp"

using ultra::Rational;

TEST_SUITE("rational") {

TEST_CASE("lowest terms and positive denominator") {
  const Rational r(6, -4);
  CHECK(r.str() == "-3/2");
  CHECK(r.numerator_str() == "-3");
  CHECK(r.denominator_str() == "2");
  CHECK(Rational(4, 2).is_integer());
  CHECK(Rational(4, 2).str() == "2");
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("parse") {
  CHECK(Rational::parse("3/6") == Rational(1, 2));
  CHECK(Rational::parse("-7") == Rational(-7));
  CHECK(Rational::parse("+7/1") == Rational(7));
  CHECK(Rational::parse(" 2/3 ") == Rational(2, 3));
  CHECK(Rational::parse("123456789012345678901234567890/10").str() ==
        "12345678901234567890123456789");
  for (const char* bad : {"", "1/", "/2", "1/0", "1/-2", "a", "1.5", "1//2"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(Rational::parse(bad), std::invalid_argument);
  }
}

TEST_CASE("arithmetic is exact") {
  Rational third(1, 3);
  CHECK(third + third + third == Rational(1));
  CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  CHECK(Rational(2, 3) / Rational(4, 3) == Rational(1, 2));
  CHECK(-Rational(1, 2) == Rational(-1, 2));
  CHECK(Rational(-5, 3).abs() == Rational(5, 3));
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("pow") {
  CHECK(Rational(3).pow(-2) == Rational(1, 9));
  CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
  CHECK(Rational(5).pow(0) == Rational(1));
  CHECK(Rational(2).pow(100).str() == "1267650600228229401496703205376");
  CHECK_THROWS(Rational(0).pow(-1));
}

TEST_CASE("total order") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(ultra::max(Rational(1), Rational(2)) == Rational(2));
  CHECK(ultra::min(Rational(1), Rational(2)) == Rational(1));
  CHECK(Rational(1, 3).sign() == 1);
  CHECK(Rational().sign() == 0);
}

TEST_CASE("stream output") {
  std::ostringstream os;
  os << Rational(-10, 4);
  CHECK(os.str() == "-5/2");
}

}
