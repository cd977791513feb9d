#include "compident/exact_arith.hpp"

#include <cctype>

namespace compident {

namespace {

bool is_decimal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class parse_mpz(std::string_view text) {
  if (!is_decimal(text)) {
    throw DomainError("not a decimal integer: '" + std::string(text) + "'");
  }
  if (text.front() == '+') text.remove_prefix(1);
  return mpz_class(std::string(text), 10);
}

}  // namespace

Integer Integer::parse(std::string_view text) { return Integer(parse_mpz(text)); }

Integer Integer::exact_div(const Integer& d) const {
  if (d.is_zero()) throw std::domain_error("division by zero");
  if (!mpz_divisible_p(v_.get_mpz_t(), d.v_.get_mpz_t())) {
    throw std::logic_error("inexact division " + str() + " / " + d.str());
  }
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), v_.get_mpz_t(), d.v_.get_mpz_t());
  return Integer(std::move(q));
}

long Integer::to_long() const {
  if (!fits_long()) throw std::overflow_error("integer does not fit in long: " + str());
  return v_.get_si();
}

Rational::Rational(const Integer& num, const Integer& den) {
  if (den.is_zero()) throw std::domain_error("rational with zero denominator");
  v_ = mpq_class(num.raw(), den.raw());
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(Integer::parse(text));
  Integer num = Integer::parse(text.substr(0, slash));
  std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && den_text.front() == '-') {
    throw DomainError("denominator must be unsigned: '" + std::string(text) + "'");
  }
  Integer den = Integer::parse(den_text);
  if (den.is_zero()) throw DomainError("zero denominator: '" + std::string(text) + "'");
  return Rational(num, den);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  v_ /= o.v_;
  return *this;
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str(10);
  return v_.get_num().get_str(10) + "/" + v_.get_den().get_str(10);
}

Integer factorial(std::int64_t k) {
  if (k < 0) throw DomainError("factorial of negative number");
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(k));
  return Integer(std::move(r));
}

Integer pow(const Integer& base, std::uint64_t exp) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.raw().get_mpz_t(), static_cast<unsigned long>(exp));
  return Integer(std::move(r));
}

Rational pow(const Rational& base, std::uint64_t exp) {
  return Rational(pow(base.num(), exp), pow(base.den(), exp));
}

Integer binomial(const Integer& m, std::int64_t k) {
  if (k < 0) return Integer(0);
  // mpz_bin_ui follows the negative-top extension C(-n, k) = (-1)^k C(n + k - 1, k).
  mpz_class r;
  mpz_bin_ui(r.get_mpz_t(), m.raw().get_mpz_t(), static_cast<unsigned long>(k));
  return Integer(std::move(r));
}

Integer multichoose(const Integer& n, std::int64_t k) {
  if (k < 0) throw DomainError("multichoose requires k >= 0");
  return binomial(n + Integer(k) - Integer(1), k);
}

Rational falling_factorial(const Rational& x, std::int64_t k) {
  if (k < 0) throw DomainError("falling_factorial requires k >= 0");
  Rational acc(1);
  for (std::int64_t j = 0; j < k; ++j) acc *= x - Rational(j);
  return acc;
}

}  // namespace compident
