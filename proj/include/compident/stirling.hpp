#pragma once

// Signed Stirling numbers of the first kind and the identities that involve
// them.

#include <cstdint>
#include <vector>

#include "compident/exact_arith.hpp"

namespace compident {

/// Triangle s(n, t) for 0 <= n <= n_max built from
/// s(n, t) = s(n-1, t-1) - (n-1) s(n-1, t), with s(0, 0) = 1.
/// Immutable once constructed.
class StirlingTable {
 public:
  explicit StirlingTable(int n_max);

  int n_max() const { return static_cast<int>(rows_.size()) - 1; }
  /// s(n, t); zero whenever t < 0 or t > n. Requires 0 <= n <= n_max().
  const Integer& at(int n, int t) const;
  /// s(n, 0..n).
  const std::vector<Integer>& row(int n) const;

 private:
  std::vector<std::vector<Integer>> rows_;
};

/// s(n, t) for n >= 1 (n = 0 is accepted under the s(0,0) = 1 convention
/// internally but rejected here). Zero when t < 1 or t > n.
Integer stirling1(int n, int t);

/// Lookup that also accepts n = 0; used by identities that reference s(k-1, t).
Integer stirling1_ext(int n, int t);

template <class T>
struct Verdict {
  T lhs;
  T rhs;
  bool pass = false;
};

/// sum_{j=t+1}^{k} C(j, t) s(k, j) = k s(k-1, t), 1 <= t <= k.
Verdict<Integer> check_eq19(int k, int t);

/// sum_{j=t}^{k} C(j, t) s(k, j) (k-1)^{j-t} = (-1)^{k+t} s(k, t), 1 <= t <= k, 0^0 = 1.
Verdict<Integer> check_eq18(int k, int t);

/// sum_{r=t}^{k} (-1)^r C(r, t) s(k, r) sum_{i=0}^{k} (-1)^i C(k+1, i+1) i^r
///   = s(k, t) + k s(k-1, t), 1 <= t <= k, evaluated literally.
Verdict<Integer> check_eq31(int k, int t);

/// s(n, t) sum_{i=1}^{n} (-1)^{i-1} C(n, i) i^{t-1} = 0 for n >= 1, t >= 2.
Verdict<Integer> check_eq41(int n, int t);

/// Expands x(x-1)...(x-n+1) and compares every coefficient with s(n, j).
bool verify_generating_poly(int n);

}  // namespace compident
