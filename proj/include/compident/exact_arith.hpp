#pragma once

// Arbitrary-precision Integer and Rational scalars plus the binomial and
// falling-factorial primitives used throughout the identity catalog.

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace compident {

/// Raised when an argument lies outside an operation's documented domain.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Integer {
 public:
  Integer() = default;
  template <std::signed_integral I>
  Integer(I v) : v_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
  template <std::unsigned_integral U>
  Integer(U v) : v_(static_cast<unsigned long>(v)) {}  // NOLINT(google-explicit-constructor)
  explicit Integer(mpz_class v) : v_(std::move(v)) {}

  /// Parses an optionally signed decimal string; throws DomainError otherwise.
  static Integer parse(std::string_view text);

  Integer& operator+=(const Integer& o) { v_ += o.v_; return *this; }
  Integer& operator-=(const Integer& o) { v_ -= o.v_; return *this; }
  Integer& operator*=(const Integer& o) { v_ *= o.v_; return *this; }

  friend Integer operator+(Integer a, const Integer& b) { return a += b; }
  friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
  friend Integer operator*(Integer a, const Integer& b) { return a *= b; }
  Integer operator-() const { return Integer(mpz_class(-v_)); }

  /// Division that must be exact; throws std::logic_error if it is not.
  Integer exact_div(const Integer& d) const;

  friend bool operator==(const Integer& a, const Integer& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
    return cmp(a.v_, b.v_) <=> 0;
  }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool fits_long() const { return v_.fits_slong_p(); }
  long to_long() const;

  std::string str() const { return v_.get_str(10); }
  const mpz_class& raw() const { return v_; }

 private:
  mpz_class v_;
};

/// Always reduced with a positive denominator, so equality is structural.
class Rational {
 public:
  Rational() = default;
  template <std::integral I>
  Rational(I v) : Rational(Integer(v)) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& v) : v_(v.raw()) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& num, const Integer& den);
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  /// Accepts "p/q" or a bare decimal "p"; q must be nonzero.
  static Rational parse(std::string_view text);

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { return Rational(mpq_class(-v_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return cmp(a.v_, b.v_) <=> 0;
  }

  Integer num() const { return Integer(mpz_class(v_.get_num())); }
  Integer den() const { return Integer(mpz_class(v_.get_den())); }
  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  /// "num/den", or just "num" when the denominator is 1.
  std::string str() const;
  const mpq_class& raw() const { return v_; }

 private:
  mpq_class v_;
};

inline std::ostream& operator<<(std::ostream& os, const Integer& v) { return os << v.str(); }
inline std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.str(); }

Integer factorial(std::int64_t k);

/// base^exp with the convention 0^0 = 1.
Integer pow(const Integer& base, std::uint64_t exp);
Rational pow(const Rational& base, std::uint64_t exp);

/// Generalized binomial falling_factorial(m, k) / k!, valid for any integer
/// top. Zero for k < 0.
Integer binomial(const Integer& m, std::int64_t k);

/// Number of k-multisets from n items, C(n + k - 1, k). Requires k >= 0.
Integer multichoose(const Integer& n, std::int64_t k);

/// x (x - 1) ... (x - k + 1); the empty product for k = 0. Requires k >= 0.
Rational falling_factorial(const Rational& x, std::int64_t k);

/// (-1)^e as an Integer.
inline Integer sign_pow(std::int64_t e) { return (e % 2 == 0) ? Integer(1) : Integer(-1); }

}  // namespace compident
