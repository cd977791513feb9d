#pragma once

// Elementary <-> complete symmetric function conversion. Three independent
// routes compute h from e: a Toeplitz determinant, the convolution
// recurrence, and the composition transform (see compositions.hpp). The
// pair catalog supplies closed-form (e_k, h_k) sequences.

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "compident/exact_arith.hpp"
#include "compident/poly.hpp"

namespace compident {

namespace detail {

// det of the k x k matrix M[i][j] = seq_{j-i+1}, seq_0 = 1, seq_{<0} = 0,
// by Gaussian elimination over the field T.
template <class T>
T toeplitz_det(std::span<const T> seq) {
  const std::size_t k = seq.size();
  if (k == 0) throw DomainError("Toeplitz determinant needs k >= 1");
  std::vector<std::vector<T>> m(k, std::vector<T>(k, T(0)));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (j + 1 == i) {
        m[i][j] = T(1);
      } else if (j >= i) {
        m[i][j] = seq[j - i];
      }
    }
  }
  T det(1);
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t pivot = col;
    while (pivot < k && m[pivot][col] == T(0)) ++pivot;
    if (pivot == k) return T(0);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    const T inv = T(1) / m[col][col];
    for (std::size_t row = col + 1; row < k; ++row) {
      if (m[row][col] == T(0)) continue;
      const T factor = m[row][col] * inv;
      for (std::size_t j = col; j < k; ++j) m[row][j] -= factor * m[col][j];
    }
  }
  return det;
}

}  // namespace detail

/// h_k as the Toeplitz determinant in e_1..e_k.
template <class T>
T h_from_e_det(std::span<const T> e) {
  return detail::toeplitz_det(e);
}

/// e_k as the dual Toeplitz determinant in h_1..h_k.
template <class T>
T e_from_h_det(std::span<const T> h) {
  return detail::toeplitz_det(h);
}

/// h_1..h_k from h_m = sum_{i=1}^{m} (-1)^{i-1} e_i h_{m-i}, h_0 = 1.
template <class T>
std::vector<T> h_from_e_conv(std::span<const T> e) {
  const std::size_t k = e.size();
  if (k == 0) throw DomainError("h_from_e_conv needs k >= 1");
  std::vector<T> h;
  h.reserve(k + 1);
  h.push_back(T(1));
  for (std::size_t m = 1; m <= k; ++m) {
    T acc(0);
    for (std::size_t i = 1; i <= m; ++i) {
      T term = e[i - 1] * h[m - i];
      if (i % 2 == 1) {
        acc += term;
      } else {
        acc -= term;
      }
    }
    h.push_back(std::move(acc));
  }
  h.erase(h.begin());
  return h;
}

/// B_m with B_1 = -1/2, from sum_{j=0}^{m} C(m+1, j) B_j = 0.
Rational bernoulli(int m);

/// Gaussian polynomial [n, k]_q; the zero polynomial when k > n.
Polynomial gaussian_binomial(int n, int k);

/// (1 - q)(1 - q^2)...(1 - q^k); phi(0) = 1.
Polynomial phi(int k);

enum class PairId { binomial, tree, bernoulli, q_binomial, q_exp, q_cauchy };

std::string_view to_string(PairId id);
/// Throws DomainError on an unknown name.
PairId parse_pair_id(std::string_view name);

struct PairParams {
  std::optional<std::int64_t> n;
  std::optional<Rational> a;
  std::optional<Rational> b;
};

template <class T>
struct TermLists {
  std::vector<T> e;  // e_1..e_k
  std::vector<T> h;  // h_1..h_k
};

using PairTerms = std::variant<TermLists<Integer>, TermLists<Rational>, TermLists<Polynomial>,
                               TermLists<RationalFunction>>;

/// e_1..e_k and h_1..h_k of a catalog pair. binomial and q_binomial need n,
/// tree and bernoulli need a, q_cauchy needs a and b; q stays symbolic.
PairTerms pair_terms(PairId id, const PairParams& params, int k);

/// Seeded generator of random nonzero rationals: numerator and denominator
/// uniform in [1, 100], sign uniform. The (seed, stream) pair fixes the
/// sequence.
class RationalSampler {
 public:
  RationalSampler(std::uint64_t seed, std::uint64_t stream);

  Rational next();
  std::vector<Rational> take(std::size_t count);

 private:
  std::mt19937_64 rng_;
};

inline constexpr std::uint64_t kDefaultSeed = 20240601;

}  // namespace compident
