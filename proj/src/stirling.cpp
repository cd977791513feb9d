#include "compident/stirling.hpp"

#include <string>

#include "compident/poly.hpp"

namespace compident {

namespace {

constexpr int kSharedRows = 64;

const StirlingTable& shared_table() {
  static const StirlingTable table(kSharedRows);
  return table;
}

const Integer& zero_integer() {
  static const Integer zero(0);
  return zero;
}

void require_triangle(int k, int t) {
  if (t < 1 || t > k) {
    throw DomainError("need 1 <= t <= k, got k = " + std::to_string(k) + ", t = " + std::to_string(t));
  }
}

}  // namespace

StirlingTable::StirlingTable(int n_max) {
  if (n_max < 0) throw DomainError("StirlingTable requires n_max >= 0");
  rows_.reserve(static_cast<std::size_t>(n_max) + 1);
  rows_.push_back({Integer(1)});
  for (int n = 1; n <= n_max; ++n) {
    const auto& prev = rows_.back();
    std::vector<Integer> row(static_cast<std::size_t>(n) + 1);
    for (int t = 0; t <= n; ++t) {
      Integer v(0);
      if (t >= 1) v += prev[static_cast<std::size_t>(t - 1)];
      if (t <= n - 1) v -= Integer(n - 1) * prev[static_cast<std::size_t>(t)];
      row[static_cast<std::size_t>(t)] = std::move(v);
    }
    rows_.push_back(std::move(row));
  }
}

const Integer& StirlingTable::at(int n, int t) const {
  if (n < 0 || n > n_max()) throw DomainError("row " + std::to_string(n) + " outside StirlingTable");
  if (t < 0 || t > n) return zero_integer();
  return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(t)];
}

const std::vector<Integer>& StirlingTable::row(int n) const {
  if (n < 0 || n > n_max()) throw DomainError("row " + std::to_string(n) + " outside StirlingTable");
  return rows_[static_cast<std::size_t>(n)];
}

Integer stirling1_ext(int n, int t) {
  if (n < 0) throw DomainError("stirling1 requires n >= 0");
  if (n <= kSharedRows) return shared_table().at(n, t);
  return StirlingTable(n).at(n, t);
}

Integer stirling1(int n, int t) {
  if (n < 1) throw DomainError("stirling1 requires n >= 1");
  return stirling1_ext(n, t);
}

Verdict<Integer> check_eq19(int k, int t) {
  require_triangle(k, t);
  Integer lhs(0);
  for (int j = t + 1; j <= k; ++j) lhs += binomial(Integer(j), t) * stirling1_ext(k, j);
  Integer rhs = Integer(k) * stirling1_ext(k - 1, t);
  const bool pass = lhs == rhs;
  return {std::move(lhs), std::move(rhs), pass};
}

Verdict<Integer> check_eq18(int k, int t) {
  require_triangle(k, t);
  Integer lhs(0);
  for (int j = t; j <= k; ++j) {
    lhs += binomial(Integer(j), t) * stirling1_ext(k, j) * pow(Integer(k - 1), static_cast<std::uint64_t>(j - t));
  }
  Integer rhs = sign_pow(k + t) * stirling1_ext(k, t);
  const bool pass = lhs == rhs;
  return {std::move(lhs), std::move(rhs), pass};
}

Verdict<Integer> check_eq31(int k, int t) {
  require_triangle(k, t);
  Integer lhs(0);
  for (int r = t; r <= k; ++r) {
    Integer interior(0);
    for (int i = 0; i <= k; ++i) {
      interior += sign_pow(i) * binomial(Integer(k + 1), i + 1) * pow(Integer(i), static_cast<std::uint64_t>(r));
    }
    lhs += sign_pow(r) * binomial(Integer(r), t) * stirling1_ext(k, r) * interior;
  }
  Integer rhs = stirling1_ext(k, t) + Integer(k) * stirling1_ext(k - 1, t);
  const bool pass = lhs == rhs;
  return {std::move(lhs), std::move(rhs), pass};
}

Verdict<Integer> check_eq41(int n, int t) {
  if (n < 1) throw DomainError("check_eq41 requires n >= 1");
  if (t < 2) throw DomainError("check_eq41 requires t >= 2");
  Integer sum(0);
  for (int i = 1; i <= n; ++i) {
    sum += sign_pow(i - 1) * binomial(Integer(n), i) * pow(Integer(i), static_cast<std::uint64_t>(t - 1));
  }
  Integer lhs = stirling1_ext(n, t) * sum;
  const bool pass = lhs.is_zero();
  return {std::move(lhs), Integer(0), pass};
}

bool verify_generating_poly(int n) {
  if (n < 1) throw DomainError("verify_generating_poly requires n >= 1");
  const Polynomial p = falling_factorial_poly(n);
  if (p.degree() != n) return false;
  for (int j = 0; j <= n; ++j) {
    if (p.coeff(j) != Rational(stirling1_ext(n, j))) return false;
  }
  return true;
}

}  // namespace compident
