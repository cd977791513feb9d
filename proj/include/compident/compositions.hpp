#pragma once

// Streaming enumeration of (weak) compositions and the signed composition
// transform
//
//   T_k(terms) = sum_{r=1}^{k} (-1)^{k-r} sum_{k_1+...+k_r=k, k_i>=1} prod terms(k_i)
//
// which maps elementary-symmetric sequences to complete ones and back.
// Everything is generic over the ring element type.

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "compident/exact_arith.hpp"

namespace compident {

struct Composition {
  std::vector<int> parts;
  int total = 0;

  friend bool operator==(const Composition&, const Composition&) = default;
};

/// Raised when an enumeration would exceed the 2^(k-1) path budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Largest k for which enumeration over all compositions of k is allowed.
/// Defaults to 20; COMPIDENT_BUDGET overrides it (read once per process).
int enumeration_budget();

/// Throws BudgetExceeded when k > enumeration_budget().
void check_enumeration_budget(int k);

/// Iterates the r-part compositions of k in lexicographic order without
/// materializing them. With min_part = 0 it yields weak compositions.
///
///   CompositionEnumerator it(4, 2);
///   while (it.next()) use(it.current());   // (1,3) (2,2) (3,1)
class CompositionEnumerator {
 public:
  CompositionEnumerator(int k, int r, int min_part = 1);

  bool next();
  const Composition& current() const { return cur_; }

 private:
  int min_part_;
  bool started_ = false;
  bool done_ = false;
  Composition cur_;
};

/// All r-part compositions of k, lexicographic. Requires k >= 1, 1 <= r <= k.
std::vector<Composition> enumerate_compositions(int k, int r);

/// All 2^(k-1) compositions of k, grouped by part count r = 1..k, each group
/// lexicographic. Subject to the enumeration budget.
std::vector<Composition> enumerate_all_compositions(int k);

/// All r-part weak compositions (parts >= 0) of k. Requires k >= 0, r >= 1.
std::vector<std::vector<int>> enumerate_weak_compositions(int k, int r);

/// Part size -> ring element.
template <class T>
using TermSequence = std::function<T(int)>;

namespace detail {

inline void require_parts(int k, int r) {
  if (k < 1) throw DomainError("composition total must be >= 1");
  if (r < 1 || r > k) throw DomainError("part count r must satisfy 1 <= r <= k");
}

// values[i] = terms(i) for 0 <= i <= k; index 0 is only read for weak sums.
template <class T>
T product_sum(const std::vector<T>& values, int k, int r, int min_part) {
  T acc(0);
  CompositionEnumerator it(k, r, min_part);
  while (it.next()) {
    T prod(1);
    for (int part : it.current().parts) prod *= values[static_cast<std::size_t>(part)];
    acc += prod;
  }
  return acc;
}

template <class T>
std::vector<T> tabulate(const TermSequence<T>& terms, int k, int first) {
  std::vector<T> values(static_cast<std::size_t>(k) + 1, T(0));
  for (int i = first; i <= k; ++i) values[static_cast<std::size_t>(i)] = terms(i);
  return values;
}

}  // namespace detail

/// Sum over r-part compositions of k (parts >= 1) of prod terms(k_i).
template <class T>
T inner_sum_positive(const TermSequence<T>& terms, int k, int r) {
  detail::require_parts(k, r);
  check_enumeration_budget(k);
  return detail::product_sum(detail::tabulate(terms, k, 1), k, r, 1);
}

/// Sum over r-part weak compositions of k of prod terms(k_i); terms(0) is used.
template <class T>
T inner_sum_weak(const TermSequence<T>& terms, int k, int r) {
  if (k < 0 || r < 1) throw DomainError("weak compositions require k >= 0, r >= 1");
  check_enumeration_budget(k + r - 1);
  return detail::product_sum(detail::tabulate(terms, k, 0), k, r, 0);
}

template <class T>
T composition_transform(const TermSequence<T>& terms, int k) {
  if (k < 1) throw DomainError("composition_transform requires k >= 1");
  check_enumeration_budget(k);
  const auto values = detail::tabulate(terms, k, 1);
  T acc(0);
  for (int r = 1; r <= k; ++r) {
    T inner = detail::product_sum(values, k, r, 1);
    if ((k - r) % 2 == 0) {
      acc += inner;
    } else {
      acc -= inner;
    }
  }
  return acc;
}

/// Inclusion-exclusion closed form of inner_sum_positive for terms C(n, i):
/// sum_{j=0}^{r-1} (-1)^j C(r, j) C((r - j) n, k).
Integer inner_sum_closed_binomial(const Integer& n, int k, int r);

/// Closed form of inner_sum_positive for terms multichoose(n, i):
/// sum_{j=0}^{r-1} (-1)^j C(r, j) C((r - j) n + k - 1, k).
Integer inner_sum_closed_multichoose(const Integer& n, int k, int r);

}  // namespace compident
