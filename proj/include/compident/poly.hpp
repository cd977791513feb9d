#pragma once

// Dense univariate polynomials over the rationals, reduced rational
// functions, and the polynomial-argument binomial / finite-difference
// operators used when identities are checked as polynomials in n.

#include <concepts>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "compident/exact_arith.hpp"

namespace compident {

/// Degree reported for the zero polynomial (stands in for minus infinity).
inline constexpr int kZeroPolyDegree = std::numeric_limits<int>::min();

class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(Rational c);  // NOLINT(google-explicit-constructor)
  Polynomial(const Integer& c) : Polynomial(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  template <std::integral I>
  Polynomial(I c) : Polynomial(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  /// coeffs[i] multiplies x^i; trailing zeros are trimmed.
  static Polynomial from_coeffs(std::vector<Rational> coeffs);
  static Polynomial monomial(Rational c, int degree);
  static Polynomial x() { return monomial(Rational(1), 1); }

  int degree() const {
    return coeffs_.empty() ? kZeroPolyDegree : static_cast<int>(coeffs_.size()) - 1;
  }
  bool is_zero() const { return coeffs_.empty(); }
  /// Coefficient of x^i (zero beyond the degree).
  Rational coeff(int i) const;
  const Rational& leading() const { return coeffs_.back(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  Polynomial operator-() const;

  /// Euclidean division: (quotient, remainder) with deg(remainder) < deg(divisor).
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;
  /// Quotient of a division that must leave no remainder.
  Polynomial exact_div(const Polynomial& divisor) const;

  Polynomial monic() const;
  Rational evaluate(const Rational& x) const;
  /// P(x + c).
  Polynomial shift(const Rational& c) const;
  /// P(Q(x)).
  Polynomial compose(const Polynomial& q) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Coefficient-vector form, lowest degree first: "[0, 1/2, 1/2]".
  std::string str() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Monic gcd over the rationals. Rejects gcd(0, 0).
Polynomial poly_gcd(Polynomial a, Polynomial b);

/// num/den with gcd(num, den) = 1 and den monic, so equality is structural.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(Polynomial num);  // NOLINT(google-explicit-constructor)
  RationalFunction(Polynomial num, Polynomial den);
  RationalFunction(const Rational& c) : RationalFunction(Polynomial(c)) {}  // NOLINT(google-explicit-constructor)
  template <std::integral I>
  RationalFunction(I c) : RationalFunction(Polynomial(c)) {}  // NOLINT(google-explicit-constructor)

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  RationalFunction operator-() const { return RationalFunction(-num_, den_); }

  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

  /// Throws std::domain_error at a pole.
  Rational evaluate(const Rational& x) const;

  /// "[num coeffs]/[den coeffs]", or just the numerator form when den = 1.
  std::string str() const;

 private:
  void normalize();
  Polynomial num_;
  Polynomial den_;
};

/// x (x - 1) ... (x - k + 1) expanded in x; coefficient j is s(k, j). Requires k >= 1.
Polynomial falling_factorial_poly(std::int64_t k);

/// C(P, k) = P (P - 1) ... (P - k + 1) / k! as a polynomial. Requires k >= 0.
Polynomial poly_binomial(const Polynomial& p, std::int64_t k);

/// m-th forward difference sum_{j=0}^{m} (-1)^{m-j} C(m, j) P(x + j). Requires m >= 0.
Polynomial finite_difference(const Polynomial& p, std::int64_t m);

nlohmann::ordered_json to_json(const Polynomial& p);
nlohmann::ordered_json to_json(const RationalFunction& f);

}  // namespace compident
