#pragma once

// Independent brute-force oracles used only by tests. None of these call the
// library routine they are used to check.

#include <cstdint>
#include <functional>
#include <vector>

#include "compident/exact_arith.hpp"

namespace compident::oracle {

/// m (m-1) ... (m-k+1) / k! by repeated multiplication and a final exact division.
inline Integer binomial(const Integer& m, std::int64_t k) {
  if (k < 0) return Integer(0);
  Integer num(1);
  Integer den(1);
  for (std::int64_t j = 0; j < k; ++j) {
    num *= m - Integer(j);
    den *= Integer(j + 1);
  }
  return num.exact_div(den);
}

/// Every composition of k, decoded from the 2^(k-1) subsets of cut points.
inline std::vector<std::vector<int>> all_compositions(int k) {
  std::vector<std::vector<int>> out;
  for (std::uint32_t mask = 0; mask < (1U << (k - 1)); ++mask) {
    std::vector<int> parts;
    int run = 1;
    for (int pos = 0; pos < k - 1; ++pos) {
      if (mask & (1U << pos)) {
        parts.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    parts.push_back(run);
    out.push_back(std::move(parts));
  }
  return out;
}

/// Every r-tuple over [min_part, k] summing to k, by exhaustive recursion.
inline std::vector<std::vector<int>> tuples_summing_to(int k, int r, int min_part) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int depth) {
    if (depth == r) {
      int s = 0;
      for (int v : cur) s += v;
      if (s == k) out.push_back(cur);
      return;
    }
    for (int v = min_part; v <= k; ++v) {
      cur.push_back(v);
      rec(depth + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

/// Signed transform sum over compositions, built on the bitmask enumeration.
template <class T>
T composition_transform(const std::function<T(int)>& terms, int k) {
  T acc(0);
  for (const auto& parts : all_compositions(k)) {
    T prod(1);
    for (int p : parts) prod *= terms(p);
    if ((k - static_cast<int>(parts.size())) % 2 == 0) {
      acc += prod;
    } else {
      acc -= prod;
    }
  }
  return acc;
}

/// Laplace expansion along the first row.
template <class T>
T cofactor_det(const std::vector<std::vector<T>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  T acc(0);
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<T>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<T> row;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != c) row.push_back(m[r][j]);
      }
      minor.push_back(std::move(row));
    }
    T term = m[0][c] * cofactor_det(minor);
    if (c % 2 == 0) {
      acc += term;
    } else {
      acc -= term;
    }
  }
  return acc;
}

/// The Toeplitz matrix with seq_{j-i+1} entries (seq_0 = 1).
template <class T>
std::vector<std::vector<T>> toeplitz(const std::vector<T>& seq) {
  const std::size_t k = seq.size();
  std::vector<std::vector<T>> m(k, std::vector<T>(k, T(0)));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (j + 1 == i) m[i][j] = T(1);
      if (j >= i) m[i][j] = seq[j - i];
    }
  }
  return m;
}

/// Signed Stirling numbers of the first kind from the expansion of the
/// falling factorial with plain int64 coefficient arithmetic (n <= 20).
inline std::vector<std::int64_t> stirling_row(int n) {
  std::vector<std::int64_t> c{1};
  for (int j = 0; j < n; ++j) {
    std::vector<std::int64_t> next(c.size() + 1, 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= static_cast<std::int64_t>(j) * c[i];
    }
    c = std::move(next);
  }
  return c;
}

}  // namespace compident::oracle
