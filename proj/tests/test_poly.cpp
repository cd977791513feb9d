#include <doctest.h>

#include <random>

#include "compident/poly.hpp"
#include "compident/stirling.hpp"
#include "compident/symfun.hpp"

using namespace compident;

namespace {

Polynomial P(std::initializer_list<long> cs) {
  std::vector<Rational> v;
  for (long c : cs) v.emplace_back(c);
  return Polynomial::from_coeffs(std::move(v));
}

Polynomial random_poly(RationalSampler& s, int degree) {
  return Polynomial::from_coeffs(s.take(static_cast<std::size_t>(degree) + 1));
}

}  // namespace

TEST_CASE("representation invariants") {
  CHECK(Polynomial().is_zero());
  CHECK(Polynomial().degree() == kZeroPolyDegree);
  CHECK(P({1, 2, 0, 0}).coeffs().size() == 2);
  CHECK(P({0, 0}).is_zero());
  CHECK((P({1, 1}) - P({1, 1})).is_zero());
  CHECK(P({3, 0, 5}).str() == "[3, 0, 5]");
  CHECK(to_json(P({1, -2})).dump() == R"(["1","-2"])");
  CHECK(to_json(RationalFunction(P({1}), P({1, -1}))).dump() == R"({"num":["-1"],"den":["-1","1"]})");
}

TEST_CASE("falling_factorial_poly") {
  CHECK(falling_factorial_poly(1) == P({0, 1}));
  CHECK(falling_factorial_poly(3) == P({0, 2, -3, 1}));
  CHECK(falling_factorial_poly(4).coeff(1) == Rational(-6));
  CHECK_THROWS_AS(falling_factorial_poly(0), DomainError);
  for (int k = 1; k <= 15; ++k) {
    const auto p = falling_factorial_poly(k);
    for (int j = 0; j <= k; ++j) CHECK(p.coeff(j) == Rational(stirling1_ext(k, j)));
  }
}

TEST_CASE("poly_binomial") {
  const Polynomial n = Polynomial::x();
  CHECK(poly_binomial(n * Rational(2), 2) == Polynomial::from_coeffs({Rational(0), Rational(-1), Rational(2)}));
  CHECK(poly_binomial(P({4, 7, 1}), 0) == Polynomial(1));
  CHECK(poly_binomial(n, 3).evaluate(Rational(5)) == Rational(10));
  CHECK(poly_binomial(P({1, 3}), 4).degree() == 4);
  CHECK(poly_binomial(P({1, 3, 1}), 3).degree() == 6);
  CHECK_THROWS_AS(poly_binomial(n, -1), DomainError);
  for (int m = -6; m <= 9; ++m) {
    for (int k = 0; k <= 6; ++k) CHECK(poly_binomial(n, k).evaluate(Rational(m)) == Rational(binomial(Integer(m), k)));
  }
}

TEST_CASE("finite_difference") {
  CHECK(finite_difference(P({0, 0, 1}), 1) == P({1, 2}));
  CHECK(finite_difference(P({3, 1, 4, 1}), 0) == P({3, 1, 4, 1}));
  CHECK(finite_difference(P({3, 1, 4, 1}), 4).is_zero());
  CHECK_THROWS_AS(finite_difference(P({1}), -1), DomainError);
}

TEST_CASE("Delta^{k+1} annihilates degree-k polynomials") {
  RationalSampler sampler(kDefaultSeed, 99);
  for (int k = 0; k <= 10; ++k) {
    for (int trial = 0; trial < 20; ++trial) {
      const Polynomial p = random_poly(sampler, k);
      REQUIRE(p.degree() == k);
      CHECK(finite_difference(p, k + 1).is_zero());
      CHECK(finite_difference(p, k).degree() == 0);
    }
  }
}

TEST_CASE("finite_difference matches the pointwise difference sum") {
  RationalSampler sampler(3, 3);
  for (int trial = 0; trial < 10; ++trial) {
    const Polynomial p = random_poly(sampler, 5);
    for (int m = 0; m <= 4; ++m) {
      const Polynomial d = finite_difference(p, m);
      for (int x = -3; x <= 3; ++x) {
        Rational direct(0);
        for (int j = 0; j <= m; ++j) {
          direct += Rational(sign_pow(m - j) * binomial(Integer(m), j)) * p.evaluate(Rational(x + j));
        }
        CHECK(d.evaluate(Rational(x)) == direct);
      }
    }
  }
}

TEST_CASE("finite difference is linear") {
  RationalSampler sampler(11, 0);
  for (int trial = 0; trial < 20; ++trial) {
    const Polynomial p = random_poly(sampler, 6);
    const Polynomial q = random_poly(sampler, 4);
    const Rational a = sampler.next();
    const Rational b = sampler.next();
    for (int m = 0; m <= 7; ++m) {
      CHECK(finite_difference(a * p + b * q, m) == a * finite_difference(p, m) + b * finite_difference(q, m));
    }
  }
}

TEST_CASE("poly_gcd") {
  CHECK(poly_gcd(P({-1, 0, 1}), P({-1, 1})) == P({-1, 1}));
  CHECK(poly_gcd(P({0, 0, 1}), P({0, 0, 0, 1})) == P({0, 0, 1}));
  CHECK(poly_gcd(phi(2), phi(1)) == P({-1, 1}));
  CHECK(poly_gcd(P({0}), P({2, 4})) == Polynomial::from_coeffs({Rational::parse("1/2"), Rational(1)}));
  CHECK(poly_gcd(P({1, 1}), P({2, 1})) == Polynomial(1));
  CHECK_THROWS_AS(poly_gcd(Polynomial(), Polynomial()), DomainError);
}

TEST_CASE("divmod reconstructs the dividend") {
  RationalSampler sampler(5, 5);
  for (int trial = 0; trial < 20; ++trial) {
    const Polynomial a = random_poly(sampler, 7);
    const Polynomial b = random_poly(sampler, 3);
    auto [q, r] = a.divmod(b);
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());
  }
  CHECK_THROWS_AS(P({1}).divmod(Polynomial()), std::domain_error);
}

TEST_CASE("rational functions normalize structurally") {
  const RationalFunction f(phi(2), phi(1) * P({2}));
  CHECK(f.den() == Polynomial(1));
  CHECK(f.num() == P({1, 0, -1}) * Rational::parse("1/2"));
  const RationalFunction g(P({1}), P({2, -2}));
  CHECK(g.den() == P({-1, 1}));
  CHECK(g.den().leading() == Rational(1));
  CHECK(RationalFunction(P({1, 1}), P({2, 2})) == RationalFunction(Rational::parse("1/2")));
  CHECK_THROWS_AS(RationalFunction(P({1}), Polynomial()), std::domain_error);
  CHECK_THROWS_AS(g.evaluate(Rational(1)), std::domain_error);
  CHECK(g.evaluate(Rational(3)) == Rational::parse("-1/4"));
}

TEST_CASE("(A/B) * (B/A) = 1 on random inputs") {
  RationalSampler sampler(21, 1);
  for (int trial = 0; trial < 30; ++trial) {
    const Polynomial a = random_poly(sampler, trial % 7);
    const Polynomial b = random_poly(sampler, (trial * 3) % 7);
    const RationalFunction f(a, b);
    CHECK(f * RationalFunction(b, a) == RationalFunction(1));
    CHECK(f / f == RationalFunction(1));
    CHECK((f - f).is_zero());
    CHECK(f + f == f * RationalFunction(2));
  }
}

TEST_CASE("shift and compose") {
  const Polynomial p = P({1, 2, 3});
  CHECK(p.shift(Rational(1)) == P({6, 8, 3}));
  CHECK(p.compose(P({0, 2})) == P({1, 4, 12}));
  CHECK(p.evaluate(Rational::parse("1/2")) == Rational::parse("11/4"));
}
