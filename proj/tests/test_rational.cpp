#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "daehee/rational.hpp"
#include "oracles.hpp"

using namespace daehee;

TEST_CASE("construction keeps canonical form") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(2, 4).numerator() == 1);
  CHECK(Rational(2, 4).denominator() == 2);
  CHECK(Rational(-4, -6) == Rational(2, 3));
  CHECK(Rational(4, -6).numerator() == -2);
  CHECK(Rational(4, -6).denominator() == 3);
  CHECK(Rational(0, 7).numerator() == 0);
  CHECK(Rational(0, 7).denominator() == 1);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("textbook arithmetic") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  CHECK(Rational(1) / Rational(1, 3) == Rational(3));
  CHECK(-Rational(1, 2) == Rational(-1, 2));
}

TEST_CASE("division by zero is an error, never a crash") {
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK_THROWS_AS(Rational(0).inverse(), std::domain_error);
}

TEST_CASE("ordering") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(0));
  CHECK(Rational(7, 7) >= Rational(1));
}

TEST_CASE("string round trips") {
  CHECK(Rational(3).str() == "3");
  CHECK(Rational(-1, 2).str() == "-1/2");
  CHECK(Rational(0).str() == "0");
  CHECK(Rational::from_string("3") == Rational(3));
  CHECK(Rational::from_string("-1/2") == Rational(-1, 2));
  CHECK(Rational::from_string("+4/6") == Rational(2, 3));
  CHECK_THROWS_AS(Rational::from_string(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string("1/"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string("/2"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string("two"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string("1/0"), std::domain_error);
}

TEST_CASE("integer powers, negative included") {
  CHECK(pow(Rational(2, 3), 2) == Rational(4, 9));
  CHECK(pow(Rational(2, 3), -2) == Rational(9, 4));
  CHECK(pow(Rational(5), 0) == Rational(1));
  CHECK(pow(Rational(0), 0) == Rational(1));
  CHECK_THROWS_AS(pow(Rational(0), -1), std::domain_error);
}

TEST_CASE("factorial and binomial stay exact past 64 bits") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
  CHECK(factorial(21) == BigInt("51090942171709440000"));
  CHECK(binomial(52, 5) == 2598960);
  CHECK(binomial(4, 7) == 0);
  CHECK(binomial(60, 30) == BigInt("118264581564861424"));
}

TEST_CASE("field axioms on random values") {
  oracles::Rng rng(20240811);
  for (int i = 0; i < 200; ++i) {
    const Rational a = rng.rational(), b = rng.rational(), c = rng.rational();
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + (-a) == Rational(0));
    if (!b.is_zero())
      CHECK((a / b) * b == a);
  }
}
