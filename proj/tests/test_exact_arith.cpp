#include <doctest.h>

#include "compident/exact_arith.hpp"
#include "oracles.hpp"

using namespace compident;

TEST_CASE("binomial examples") {
  CHECK(binomial(Integer(4), 2) == Integer(6));
  CHECK(binomial(Integer(3), 5) == Integer(0));
  // (-2)(-3)(-4)/3!
  CHECK(binomial(Integer(-2), 3) == Integer(-4));
  CHECK(binomial(Integer(-2), 3) == oracle::binomial(Integer(-2), 3));
  CHECK(binomial(Integer(7), -1) == Integer(0));
  CHECK(binomial(Integer(-7), -3) == Integer(0));
}

TEST_CASE("binomial agrees with the falling-factorial oracle at large scale") {
  const Integer big = binomial(Integer(500), 250);
  CHECK(big == oracle::binomial(Integer(500), 250));
  CHECK(big.str().size() == 150);
  for (int m = -40; m <= 40; ++m) {
    for (int k = -2; k <= 40; ++k) CHECK(binomial(Integer(m), k) == oracle::binomial(Integer(m), k));
  }
}

TEST_CASE("Pascal recurrence holds for negative and positive tops") {
  for (int m = -30; m <= 30; ++m) {
    for (int k = 0; k <= 30; ++k) {
      CHECK(binomial(Integer(m), k) == binomial(Integer(m - 1), k - 1) + binomial(Integer(m - 1), k));
    }
  }
}

TEST_CASE("hockey-stick sums") {
  for (int k = 0; k <= 30; ++k) {
    for (int i = 0; i <= k; ++i) {
      Integer s(0);
      for (int r = i; r <= k; ++r) s += binomial(Integer(r), i);
      CHECK(s == binomial(Integer(k + 1), i + 1));
    }
  }
}

TEST_CASE("negation rule C(-n, k) = (-1)^k C(n+k-1, k)") {
  for (int n = 1; n <= 30; ++n) {
    for (int k = 1; k <= 30; ++k) CHECK(binomial(Integer(-n), k) == sign_pow(k) * binomial(Integer(n + k - 1), k));
  }
}

TEST_CASE("multichoose") {
  CHECK(multichoose(Integer(3), 2) == Integer(6));
  CHECK(multichoose(Integer(17), 0) == Integer(1));
  CHECK(multichoose(Integer(-4), 0) == Integer(1));
  CHECK(multichoose(Integer(1), 5) == Integer(1));
  CHECK_THROWS_AS(multichoose(Integer(3), -1), DomainError);
}

TEST_CASE("falling factorial") {
  CHECK(falling_factorial(Rational(5), 3) == Rational(60));
  CHECK(falling_factorial(Rational::parse("7/3"), 0) == Rational(1));
  CHECK(falling_factorial(Rational(2), 3) == Rational(0));
  CHECK(falling_factorial(Rational::parse("1/2"), 2) == Rational::parse("-1/4"));
  CHECK_THROWS_AS(falling_factorial(Rational(2), -1), DomainError);
  for (int m = -10; m <= 20; ++m) {
    for (int k = 0; k <= 20; ++k) {
      CHECK(falling_factorial(Rational(m), k) == Rational(factorial(k) * binomial(Integer(m), k)));
    }
  }
}

TEST_CASE("rationals are reduced with positive denominator") {
  const Rational r(Integer(6), Integer(-4));
  CHECK(r.num() == Integer(-3));
  CHECK(r.den() == Integer(2));
  CHECK(r.str() == "-3/2");
  CHECK(Rational(Integer(0), Integer(-5)).str() == "0");
  CHECK(Rational(Integer(0), Integer(-5)).den() == Integer(1));
  CHECK(Rational::parse("10/4") == Rational::parse("5/2"));
  CHECK(Rational::parse("-12").str() == "-12");
  CHECK_THROWS_AS(Rational::parse("1/0"), DomainError);
  CHECK_THROWS_AS(Rational::parse("1/-2"), DomainError);
  CHECK_THROWS_AS(Rational::parse("x"), DomainError);
  CHECK_THROWS_AS(Rational::parse(""), DomainError);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("integer parsing and serialization") {
  CHECK(Integer::parse("-123456789012345678901234567890").str() == "-123456789012345678901234567890");
  CHECK(Integer::parse("+5") == Integer(5));
  CHECK_THROWS_AS(Integer::parse("12a"), DomainError);
  CHECK_THROWS_AS(Integer::parse("-"), DomainError);
  CHECK(Integer(12).exact_div(Integer(4)) == Integer(3));
  CHECK_THROWS(Integer(12).exact_div(Integer(5)));
}

TEST_CASE("pow uses 0^0 = 1") {
  CHECK(pow(Integer(0), 0) == Integer(1));
  CHECK(pow(Integer(0), 3) == Integer(0));
  CHECK(pow(Rational::parse("-2/3"), 3) == Rational::parse("-8/27"));
}
