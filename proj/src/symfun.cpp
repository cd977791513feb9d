#include "compident/symfun.hpp"

#include <array>
#include <string>

namespace compident {

namespace {

constexpr int kSharedBernoulli = 64;

std::vector<Rational> bernoulli_table(int m_max) {
  std::vector<Rational> b;
  b.reserve(static_cast<std::size_t>(m_max) + 1);
  b.emplace_back(1);
  for (int m = 1; m <= m_max; ++m) {
    Rational acc(0);
    for (int j = 0; j < m; ++j) acc += Rational(binomial(Integer(m + 1), j)) * b[static_cast<std::size_t>(j)];
    b.push_back(-acc / Rational(m + 1));
  }
  return b;
}

const std::vector<Rational>& shared_bernoulli() {
  static const std::vector<Rational> table = bernoulli_table(kSharedBernoulli);
  return table;
}

// q^d
Polynomial q_pow(int d) { return Polynomial::monomial(Rational(1), d); }

const Rational& require_param(const std::optional<Rational>& v, std::string_view pair, const char* name) {
  if (!v) throw DomainError("pair '" + std::string(pair) + "' requires parameter " + name);
  return *v;
}

std::int64_t require_n(const PairParams& params, std::string_view pair) {
  if (!params.n) throw DomainError("pair '" + std::string(pair) + "' requires parameter n");
  if (*params.n < 0) throw DomainError("pair '" + std::string(pair) + "' requires n >= 0");
  return *params.n;
}

constexpr std::array<std::pair<PairId, std::string_view>, 6> kPairNames{{
    {PairId::binomial, "binomial"},
    {PairId::tree, "tree"},
    {PairId::bernoulli, "bernoulli"},
    {PairId::q_binomial, "q_binomial"},
    {PairId::q_exp, "q_exp"},
    {PairId::q_cauchy, "q_cauchy"},
}};

}  // namespace

Rational bernoulli(int m) {
  if (m < 0) throw DomainError("bernoulli requires m >= 0");
  if (m <= kSharedBernoulli) return shared_bernoulli()[static_cast<std::size_t>(m)];
  return bernoulli_table(m).back();
}

Polynomial phi(int k) {
  if (k < 0) throw DomainError("phi requires k >= 0");
  Polynomial acc(1);
  for (int i = 1; i <= k; ++i) acc *= Polynomial(1) - q_pow(i);
  return acc;
}

Polynomial gaussian_binomial(int n, int k) {
  if (n < 0 || k < 0) throw DomainError("gaussian_binomial requires n, k >= 0");
  if (k > n) return {};
  Polynomial num(1);
  for (int j = 0; j < k; ++j) num *= Polynomial(1) - q_pow(n - j);
  return num.exact_div(phi(k));
}

std::string_view to_string(PairId id) {
  for (const auto& [pid, name] : kPairNames) {
    if (pid == id) return name;
  }
  return "unknown";
}

PairId parse_pair_id(std::string_view name) {
  for (const auto& [pid, pname] : kPairNames) {
    if (pname == name) return pid;
  }
  throw DomainError("unknown pair id '" + std::string(name) + "'");
}

PairTerms pair_terms(PairId id, const PairParams& params, int k) {
  if (k < 1) throw DomainError("pair_terms requires k >= 1");
  const std::string_view name = to_string(id);
  switch (id) {
    case PairId::binomial: {
      const Integer n(require_n(params, name));
      TermLists<Integer> out;
      for (int i = 1; i <= k; ++i) {
        out.e.push_back(binomial(n, i));
        out.h.push_back(multichoose(n, i));
      }
      return out;
    }
    case PairId::tree: {
      const Rational& a = require_param(params.a, name, "a");
      TermLists<Rational> out;
      for (int i = 1; i <= k; ++i) {
        const Rational inv_fact(Integer(1), factorial(i));
        out.e.push_back(a * pow(a - Rational(i), static_cast<std::uint64_t>(i - 1)) * inv_fact);
        out.h.push_back(a * pow(a + Rational(i), static_cast<std::uint64_t>(i - 1)) * inv_fact);
      }
      return out;
    }
    case PairId::bernoulli: {
      const Rational& a = require_param(params.a, name, "a");
      TermLists<Rational> out;
      for (int i = 1; i <= k; ++i) {
        const Rational ai = pow(a, static_cast<std::uint64_t>(i));
        out.e.push_back(Rational(sign_pow(i)) * ai * bernoulli(i) * Rational(Integer(1), factorial(i)));
        out.h.push_back(ai * Rational(Integer(1), factorial(i + 1)));
      }
      return out;
    }
    case PairId::q_binomial: {
      const auto n = static_cast<int>(require_n(params, name));
      TermLists<Polynomial> out;
      for (int i = 1; i <= k; ++i) {
        out.e.push_back(q_pow(i * (i - 1) / 2) * gaussian_binomial(n, i));
        out.h.push_back(gaussian_binomial(n + i - 1, i));
      }
      return out;
    }
    case PairId::q_exp: {
      TermLists<RationalFunction> out;
      for (int i = 1; i <= k; ++i) {
        out.e.emplace_back(q_pow(i * (i - 1) / 2), phi(i));
        out.h.emplace_back(Polynomial(1), phi(i));
      }
      return out;
    }
    case PairId::q_cauchy: {
      const Rational& a = require_param(params.a, name, "a");
      const Rational& b = require_param(params.b, name, "b");
      TermLists<RationalFunction> out;
      Polynomial e_num(1);
      Polynomial h_num(1);
      for (int i = 1; i <= k; ++i) {
        e_num *= Polynomial(a) - b * q_pow(i - 1);
        h_num *= a * q_pow(i - 1) - Polynomial(b);
        out.e.emplace_back(e_num, phi(i));
        out.h.emplace_back(h_num, phi(i));
      }
      return out;
    }
  }
  throw DomainError("unknown pair id");
}

RationalSampler::RationalSampler(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  rng_.seed(seq);
}

Rational RationalSampler::next() {
  // Reduced by hand, not via <random> distributions, so draws are the same
  // under every standard library.
  const auto num = static_cast<long>(rng_() % 100 + 1);
  const auto den = static_cast<long>(rng_() % 100 + 1);
  const bool negative = (rng_() & 1U) != 0;
  return Rational(Integer(negative ? -num : num), Integer(den));
}

std::vector<Rational> RationalSampler::take(std::size_t count) {
  std::vector<Rational> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(next());
  return out;
}

}  // namespace compident
