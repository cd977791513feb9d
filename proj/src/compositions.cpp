#include "compident/compositions.hpp"

#include <cstdlib>
#include <string>

namespace compident {

namespace {

int read_budget() {
  const char* env = std::getenv("COMPIDENT_BUDGET");
  if (env == nullptr || *env == '\0') return 20;
  try {
    std::size_t used = 0;
    const int v = std::stoi(env, &used);
    if (used == std::string(env).size() && v >= 1) return v;
  } catch (const std::exception&) {
  }
  throw DomainError(std::string("COMPIDENT_BUDGET must be a positive integer, got '") + env + "'");
}

}  // namespace

int enumeration_budget() {
  static const int budget = read_budget();
  return budget;
}

void check_enumeration_budget(int k) {
  if (k > enumeration_budget()) {
    throw BudgetExceeded("enumeration over 2^(k-1) compositions refused for k = " + std::to_string(k) +
                         " (budget " + std::to_string(enumeration_budget()) +
                         "; raise COMPIDENT_BUDGET to override)");
  }
}

CompositionEnumerator::CompositionEnumerator(int k, int r, int min_part) : min_part_(min_part) {
  if (min_part != 0 && min_part != 1) throw DomainError("min_part must be 0 or 1");
  if (r < 1) throw DomainError("part count r must be >= 1");
  if (k < 0) throw DomainError("composition total must be >= 0");
  cur_.total = k;
  if (k < r * min_part) {
    done_ = true;
    return;
  }
  cur_.parts.assign(static_cast<std::size_t>(r), min_part);
  cur_.parts.back() = k - (r - 1) * min_part;
}

bool CompositionEnumerator::next() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    return true;
  }
  auto& p = cur_.parts;
  const int r = static_cast<int>(p.size());
  int suffix = p.back();
  for (int i = r - 2; i >= 0; --i) {
    const int tail_len = r - 1 - i;
    if (suffix > tail_len * min_part_) {
      ++p[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < r - 1; ++j) p[static_cast<std::size_t>(j)] = min_part_;
      p.back() = suffix - 1 - (tail_len - 1) * min_part_;
      return true;
    }
    suffix += p[static_cast<std::size_t>(i)];
  }
  done_ = true;
  return false;
}

std::vector<Composition> enumerate_compositions(int k, int r) {
  detail::require_parts(k, r);
  std::vector<Composition> out;
  CompositionEnumerator it(k, r);
  while (it.next()) out.push_back(it.current());
  return out;
}

std::vector<Composition> enumerate_all_compositions(int k) {
  if (k < 1) throw DomainError("composition total must be >= 1");
  check_enumeration_budget(k);
  std::vector<Composition> out;
  for (int r = 1; r <= k; ++r) {
    CompositionEnumerator it(k, r);
    while (it.next()) out.push_back(it.current());
  }
  return out;
}

std::vector<std::vector<int>> enumerate_weak_compositions(int k, int r) {
  if (k < 0 || r < 1) throw DomainError("weak compositions require k >= 0, r >= 1");
  std::vector<std::vector<int>> out;
  CompositionEnumerator it(k, r, 0);
  while (it.next()) out.push_back(it.current().parts);
  return out;
}

Integer inner_sum_closed_binomial(const Integer& n, int k, int r) {
  if (n.sign() < 0) throw DomainError("inner_sum_closed_binomial requires n >= 0");
  detail::require_parts(k, r);
  Integer acc(0);
  for (int j = 0; j < r; ++j) {
    acc += sign_pow(j) * binomial(Integer(r), j) * binomial(Integer(r - j) * n, k);
  }
  return acc;
}

Integer inner_sum_closed_multichoose(const Integer& n, int k, int r) {
  if (n.sign() < 1) throw DomainError("inner_sum_closed_multichoose requires n >= 1");
  detail::require_parts(k, r);
  Integer acc(0);
  for (int j = 0; j < r; ++j) {
    acc += sign_pow(j) * binomial(Integer(r), j) * binomial(Integer(r - j) * n + Integer(k - 1), k);
  }
  return acc;
}

}  // namespace compident
