#include "compident/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace compident {

Polynomial::Polynomial(Rational c) {
  if (!c.is_zero()) coeffs_.push_back(std::move(c));
}

Polynomial Polynomial::from_coeffs(std::vector<Rational> coeffs) {
  Polynomial p;
  p.coeffs_ = std::move(coeffs);
  p.trim();
  return p;
}

Polynomial Polynomial::monomial(Rational c, int degree) {
  if (degree < 0) throw DomainError("monomial degree must be nonnegative");
  if (c.is_zero()) return {};
  std::vector<Rational> cs(static_cast<std::size_t>(degree) + 1);
  cs.back() = std::move(c);
  return from_coeffs(std::move(cs));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Polynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rational(0);
  return coeffs_[static_cast<std::size_t>(i)];
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return Polynomial::from_coeffs(std::move(out));
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& x : r.coeffs_) x = -x;
  return r;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  Polynomial rem = *this;
  if (rem.degree() < divisor.degree()) return {Polynomial(), rem};
  const int dd = divisor.degree();
  std::vector<Rational> quot(static_cast<std::size_t>(rem.degree() - dd) + 1);
  const Rational inv_lead = Rational(1) / divisor.leading();
  for (int i = rem.degree(); i >= dd; --i) {
    const Rational c = rem.coeffs_[static_cast<std::size_t>(i)] * inv_lead;
    if (c.is_zero()) continue;
    quot[static_cast<std::size_t>(i - dd)] = c;
    for (int j = 0; j <= dd; ++j) {
      rem.coeffs_[static_cast<std::size_t>(i - dd + j)] -= c * divisor.coeffs_[static_cast<std::size_t>(j)];
    }
  }
  rem.trim();
  return {from_coeffs(std::move(quot)), std::move(rem)};
}

Polynomial Polynomial::exact_div(const Polynomial& divisor) const {
  auto [q, r] = divmod(divisor);
  if (!r.is_zero()) throw std::logic_error("inexact polynomial division");
  return q;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  return *this * (Rational(1) / leading());
}

Rational Polynomial::evaluate(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::shift(const Rational& c) const {
  return compose(from_coeffs({c, Rational(1)}));
}

Polynomial Polynomial::compose(const Polynomial& q) const {
  Polynomial acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + Polynomial(*it);
  return acc;
}

std::string Polynomial::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out += ", ";
    out += coeffs_[i].str();
  }
  return out + "]";
}

Polynomial poly_gcd(Polynomial a, Polynomial b) {
  if (a.is_zero() && b.is_zero()) throw DomainError("poly_gcd(0, 0) is undefined");
  while (!b.is_zero()) {
    Polynomial r = a.divmod(b).second;
    // Keeping the remainder monic curbs coefficient growth.
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

RationalFunction::RationalFunction(Polynomial num) : num_(std::move(num)), den_(1) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = Polynomial(1);
    return;
  }
  if (den_.degree() > 0) {
    Polynomial g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_.exact_div(g);
      den_ = den_.exact_div(g);
    }
  }
  const Rational lead = den_.leading();
  if (lead != Rational(1)) {
    const Rational inv = Rational(1) / lead;
    num_ *= inv;
    den_ *= inv;
  }
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    Polynomial g = poly_gcd(den_, o.den_);
    Polynomial od = o.den_.exact_div(g);
    num_ = num_ * od + o.num_ * den_.exact_div(g);
    den_ = den_ * od;
  }
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
  if (o.is_zero()) throw std::domain_error("rational function division by zero");
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

Rational RationalFunction::evaluate(const Rational& x) const {
  const Rational d = den_.evaluate(x);
  if (d.is_zero()) throw std::domain_error("rational function evaluated at a pole");
  return num_.evaluate(x) / d;
}

std::string RationalFunction::str() const {
  if (den_ == Polynomial(1)) return num_.str();
  return num_.str() + "/" + den_.str();
}

Polynomial falling_factorial_poly(std::int64_t k) {
  if (k < 1) throw DomainError("falling_factorial_poly requires k >= 1");
  Polynomial acc(1);
  for (std::int64_t j = 0; j < k; ++j) acc *= Polynomial::from_coeffs({Rational(-j), Rational(1)});
  return acc;
}

Polynomial poly_binomial(const Polynomial& p, std::int64_t k) {
  if (k < 0) throw DomainError("poly_binomial requires k >= 0");
  Polynomial acc(1);
  for (std::int64_t j = 0; j < k; ++j) acc *= p - Polynomial(j);
  return acc * Rational(Integer(1), factorial(k));
}

Polynomial finite_difference(const Polynomial& p, std::int64_t m) {
  if (m < 0) throw DomainError("finite_difference requires m >= 0");
  Polynomial acc;
  for (std::int64_t j = 0; j <= m; ++j) {
    acc += p.shift(Rational(j)) * Rational(sign_pow(m - j) * binomial(Integer(m), j));
  }
  return acc;
}

nlohmann::ordered_json to_json(const Polynomial& p) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : p.coeffs()) arr.push_back(c.str());
  return arr;
}

nlohmann::ordered_json to_json(const RationalFunction& f) {
  return nlohmann::ordered_json{{"num", to_json(f.num())}, {"den", to_json(f.den())}};
}

}  // namespace compident
