#include "compident/identities.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <exception>
#include <functional>
#include <thread>

#include "compident/compositions.hpp"
#include "compident/poly.hpp"
#include "compident/stirling.hpp"

namespace compident {

namespace {

struct CaseValues {
  std::string lhs;
  std::string rhs;
  bool pass = false;
  std::vector<std::pair<std::string, std::string>> extra_params;
};

template <class T>
CaseValues compare(const T& lhs, const T& rhs) {
  return {lhs.str(), rhs.str(), lhs == rhs, {}};
}

template <class T>
std::string join(const std::vector<T>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += values[i].str();
  }
  return out + "]";
}

using Evaluator = std::function<CaseValues(const Binding&, const RandomPolicy&)>;
using Constraint = std::function<bool(const Binding&)>;

// Which random draws a randomized identity consumes.
enum class Draws { none, sequence, a, ab };

struct Entry {
  IdentityDescriptor descriptor;
  Evaluator evaluate;
  Constraint constraint;  // empty when there is no relational constraint
  Draws draws = Draws::none;
};

std::int64_t get(const Binding& b, const std::string& name) {
  auto it = b.find(name);
  if (it == b.end()) throw DomainError("missing parameter '" + name + "'");
  return it->second;
}

int get_int(const Binding& b, const std::string& name) {
  const std::int64_t v = get(b, name);
  if (v > 1'000'000 || v < -1'000'000) throw DomainError("parameter '" + name + "' out of supported range");
  return static_cast<int>(v);
}

std::uint64_t get_sample(const Binding& b) {
  auto it = b.find("sample");
  return it == b.end() ? 0 : static_cast<std::uint64_t>(it->second);
}

Range span(std::int64_t lo, std::int64_t hi) { return Range{lo, hi}; }

// ---- evaluators ----------------------------------------------------------

CaseValues eval_eq5(const Binding& b, const RandomPolicy&) {
  const int k = get_int(b, "k");
  const Integer n(get(b, "n"));
  const TermSequence<Integer> terms = [&](int i) { return binomial(n, i); };
  return compare(composition_transform(terms, k), binomial(n + Integer(k - 1), k));
}

CaseValues eval_eq6(const Binding& b, const RandomPolicy&) {
  const int k = get_int(b, "k");
  const std::int64_t n = get(b, "n");
  Integer lhs(0);
  for (std::int64_t j = 1; j <= n; ++j) lhs += binomial(Integer(j + k - 2), k - 1);
  return compare(lhs, binomial(Integer(n + k - 1), k));
}

Integer eq13_lhs(const Integer& n, int k) {
  Integer acc(0);
  for (int i = 1; i <= k; ++i) acc += sign_pow(i) * binomial(n * Integer(i), k) * binomial(Integer(k + 1), i + 1);
  return acc;
}

CaseValues eval_eq13(const Binding& b, const RandomPolicy&) {
  const int k = get_int(b, "k");
  if (!b.contains("n")) {
    auto r = verify_polynomial_in_n("eq13", k);
    return {r.lhs, r.rhs, r.pass, {}};
  }
  const Integer n(get(b, "n"));
  return compare(eq13_lhs(n, k), sign_pow(k) * binomial(n + Integer(k - 1), k));
}

CaseValues eval_eq17(const Binding& b, const RandomPolicy&) {
  auto r = check_eq17_coefficients(get_int(b, "k"));
  return {r.lhs, r.rhs, r.pass, {}};
}

template <Verdict<Integer> (*Check)(int, int)>
CaseValues eval_stirling_kt(const Binding& b, const RandomPolicy&) {
  auto v = Check(get_int(b, "k"), get_int(b, "t"));
  return {v.lhs.str(), v.rhs.str(), v.pass, {}};
}

CaseValues eval_eq41(const Binding& b, const RandomPolicy&) {
  auto v = check_eq41(get_int(b, "n"), get_int(b, "t"));
  return {v.lhs.str(), v.rhs.str(), v.pass, {}};
}

CaseValues eval_eq29(const Binding& b, const RandomPolicy&) {
  const int k = get_int(b, "k");
  if (!b.contains("n")) {
    auto r = verify_polynomial_in_n("eq29", k);
    return {r.lhs, r.rhs, r.pass, {}};
  }
  const Integer n(get(b, "n"));
  Integer lhs(0);
  for (int i = 1; i <= k; ++i) {
    lhs += sign_pow(i) * (binomial((n - Integer(1)) * Integer(i), k) - binomial(n * Integer(i), k)) *
           binomial(Integer(k + 1), i + 1);
  }
  Integer rhs(0);
  for (int i = 1; i <= k - 1; ++i) rhs += sign_pow(i) * binomial(n * Integer(i), k - 1) * binomial(Integer(k), i + 1);
  return compare(lhs, rhs);
}

CaseValues eval_eq36(const Binding& b, const RandomPolicy&) {
  const Integer x(get(b, "x"));
  const Integer n(get(b, "n"));
  const int k = get_int(b, "k");
  Rational lhs(0);
  for (int i = 1; i <= k - 1; ++i) {
    const Integer top = x + Integer(i) * n;
    lhs += Rational(sign_pow(i + k + 1) * binomial(Integer(k), i) * binomial(top, k)) * Rational(x, top);
  }
  return compare(lhs, rothe_hagen_A(x, n, k) + Rational(sign_pow(k) * binomial(x, k)));
}

CaseValues eval_eq37(const Binding& b, const RandomPolicy&) {
  const Integer x(get(b, "x"));
  const Integer n(get(b, "n"));
  const int k = get_int(b, "k");
  Rational lhs(0);
  for (int i = 1; i <= k; ++i) {
    const Integer top = x + Integer(i) * n;
    lhs += Rational(sign_pow(i - 1) * binomial(Integer(k), i) * binomial(top, k)) * Rational(Integer(1), top);
  }
  return compare(lhs, Rational(0));
}

CaseValues eval_eq38(const Binding& b, const RandomPolicy&) {
  const int k = get_int(b, "k");
  const Integer n(get(b, "n"));
  Rational lhs(0);
  for (int i = 1; i <= k; ++i) {
    lhs += Rational(sign_pow(i - 1) * binomial(Integer(i) * n, k) * binomial(Integer(k), i), Integer(i));
  }
  return compare(lhs, Rational(sign_pow(k - 1) * n, Integer(k)));
}

CaseValues eval_eq42(const Binding& b, const RandomPolicy&) {
  const int k = get_int(b, "k");
  const Integer n(get(b, "n"));
  const TermSequence<Integer> terms = [&](int i) { return multichoose(n, i); };
  return compare(composition_transform(terms, k), binomial(n, k));
}

CaseValues eval_eq47(const Binding& b, const RandomPolicy&) {
  const int k = get_int(b, "k");
  if (!b.contains("n")) {
    auto r = verify_polynomial_in_n("eq47", k);
    return {r.lhs, r.rhs, r.pass, {}};
  }
  const Integer n(get(b, "n"));
  Integer lhs(0);
  for (int i = 1; i <= k; ++i) {
    lhs += sign_pow(i) * binomial(n * Integer(i) + Integer(k - 1), k) * binomial(Integer(k + 1), i + 1);
  }
  return compare(lhs, sign_pow(k) * binomial(n, k));
}

CaseValues eval_lemma7(const Binding& b, const RandomPolicy& policy) {
  const int k = get_int(b, "k");
  const std::vector<Rational> e = RationalSampler(policy.seed, get_sample(b)).take(static_cast<std::size_t>(k));
  const TermSequence<Rational> e_terms = [&](int i) { return e[static_cast<std::size_t>(i - 1)]; };
  std::vector<Rational> h;
  for (int m = 1; m <= k; ++m) h.push_back(composition_transform(e_terms, m));
  const TermSequence<Rational> h_terms = [&](int i) { return h[static_cast<std::size_t>(i - 1)]; };
  std::vector<Rational> recovered;
  for (int m = 1; m <= k; ++m) recovered.push_back(composition_transform(h_terms, m));
  return {join(recovered), join(e), recovered == e, {}};
}

template <class T>
CaseValues transform_against(const std::vector<T>& source, const std::vector<T>& target, int k) {
  const TermSequence<T> terms = [&](int i) { return source[static_cast<std::size_t>(i - 1)]; };
  return compare(composition_transform(terms, k), target[static_cast<std::size_t>(k - 1)]);
}

// e -> h when forward, h -> e otherwise.
CaseValues eval_pair(PairId pair, bool forward, const Binding& b, const RandomPolicy& policy) {
  const int k = get_int(b, "k");
  PairParams params;
  std::vector<std::pair<std::string, std::string>> extra;
  if (pair == PairId::q_binomial) params.n = get(b, "n");
  if (pair == PairId::tree || pair == PairId::bernoulli || pair == PairId::q_cauchy) {
    auto [a, bb] = sample_ab(policy, get_sample(b));
    params.a = a;
    extra.emplace_back("a", a.str());
    if (pair == PairId::q_cauchy) {
      params.b = bb;
      extra.emplace_back("b", bb.str());
    }
  }
  CaseValues out = std::visit(
      [&](const auto& lists) {
        return forward ? transform_against(lists.e, lists.h, k) : transform_against(lists.h, lists.e, k);
      },
      pair_terms(pair, params, k));
  out.extra_params = std::move(extra);
  return out;
}

Evaluator pair_evaluator(PairId pair, bool forward) {
  return [pair, forward](const Binding& b, const RandomPolicy& p) { return eval_pair(pair, forward, b, p); };
}

// ---- registry ------------------------------------------------------------

const char* kEhStatement = "sum_{r=1}^{k} (-1)^{k-r} sum_{k_1+...+k_r=k, k_i>=1} prod e_{k_i} = h_k";
const char* kHeStatement = "sum_{r=1}^{k} (-1)^{k-r} sum_{k_1+...+k_r=k, k_i>=1} prod h_{k_i} = e_k";

void add_pair(std::vector<Entry>& out, int number, PairId pair, std::string_view e_def, std::string_view h_def,
              const std::string& ring) {
  Draws draws = Draws::none;
  std::vector<ParamSlot> params{{"k", 1, false}};
  RangeMap defaults{{"k", span(1, 8)}};
  if (pair == PairId::q_binomial) {
    params.push_back({"n", 0, false});
    defaults["n"] = span(0, 6);
  }
  if (pair == PairId::tree || pair == PairId::bernoulli) draws = Draws::a;
  if (pair == PairId::q_cauchy) draws = Draws::ab;
  if (draws != Draws::none) params.push_back({"sample", 0, true});

  const std::string defs = std::string(" with e_k = ") + std::string(e_def) + ", h_k = " + std::string(h_def);
  for (bool forward : {true, false}) {
    Entry entry;
    entry.descriptor.id = "pair" + std::to_string(number) + (forward ? "_eh" : "_he");
    entry.descriptor.statement = (forward ? kEhStatement : kHeStatement) + defs;
    entry.descriptor.ring = ring;
    entry.descriptor.params = params;
    entry.descriptor.default_ranges = defaults;
    entry.descriptor.randomized = draws != Draws::none;
    entry.evaluate = pair_evaluator(pair, forward);
    entry.draws = draws;
    out.push_back(std::move(entry));
  }
}

std::vector<Entry> build_registry() {
  std::vector<Entry> r;
  auto add = [&r](std::string id, std::string statement, std::string ring, Mode mode, std::vector<ParamSlot> params,
                  RangeMap defaults, Evaluator eval, std::string constraint_text = {}, Constraint constraint = {}) {
    Entry e;
    e.descriptor = IdentityDescriptor{std::move(id),       std::move(statement), std::move(ring),
                                      mode,                std::move(params),    std::move(constraint_text),
                                      std::move(defaults), false};
    e.evaluate = std::move(eval);
    e.constraint = std::move(constraint);
    r.push_back(std::move(e));
  };
  const Constraint t_le_k = [](const Binding& b) { return get(b, "t") <= get(b, "k"); };

  add("eq5", "sum_{r=1}^{k} (-1)^{k-r} sum_{k_1+...+k_r=k, k_i>=1} prod C(n,k_i) = C(n+k-1,k)", "Integer",
      Mode::pointwise, {{"k", 1}, {"n", 0}}, {{"k", span(1, 10)}, {"n", span(0, 10)}}, eval_eq5);
  add("eq6", "sum_{j=1}^{n} C(j+k-2,k-1) = C(n+k-1,k)", "Integer", Mode::pointwise, {{"k", 1}, {"n", 0}},
      {{"k", span(1, 15)}, {"n", span(1, 15)}}, eval_eq6);
  add("eq13", "sum_{i=1}^{k} (-1)^i C(ni,k) C(k+1,i+1) = (-1)^k C(n+k-1,k)", "Polynomial", Mode::polynomial_in_n,
      {{"k", 1}, {"n", 0, true}}, {{"k", span(1, 20)}}, eval_eq13);
  add("eq17",
      "Coef_{n^t} sum_{i=1}^{k} (-1)^i (in)(in-1)...(in-k+1) C(k+1,i+1) = (-1)^t s(k,t), 1 <= t <= k",
      "Polynomial", Mode::polynomial_in_n, {{"k", 1}}, {{"k", span(1, 12)}}, eval_eq17);
  add("eq18", "sum_{j=t}^{k} C(j,t) s(k,j) (k-1)^{j-t} = (-1)^{k+t} s(k,t)", "Integer", Mode::pointwise,
      {{"k", 1}, {"t", 1}}, {{"k", span(1, 25)}, {"t", span(1, 25)}}, eval_stirling_kt<check_eq18>, "t <= k",
      t_le_k);
  add("eq19", "sum_{j=t+1}^{k} C(j,t) s(k,j) = k s(k-1,t)", "Integer", Mode::pointwise, {{"k", 1}, {"t", 1}},
      {{"k", span(1, 25)}, {"t", span(1, 25)}}, eval_stirling_kt<check_eq19>, "t <= k", t_le_k);
  add("eq29",
      "sum_{i=1}^{k} (-1)^i (C((n-1)i,k) - C(ni,k)) C(k+1,i+1) = sum_{i=1}^{k-1} (-1)^i C(ni,k-1) C(k,i+1)",
      "Polynomial", Mode::polynomial_in_n, {{"k", 2}, {"n", 0, true}}, {{"k", span(2, 15)}}, eval_eq29);
  add("eq31",
      "sum_{r=t}^{k} (-1)^r C(r,t) s(k,r) sum_{i=0}^{k} (-1)^i C(k+1,i+1) i^r = s(k,t) + k s(k-1,t)", "Integer",
      Mode::pointwise, {{"k", 1}, {"t", 1}}, {{"k", span(1, 12)}, {"t", span(1, 12)}}, eval_stirling_kt<check_eq31>,
      "t <= k", t_le_k);
  add("eq36",
      "sum_{i=1}^{k-1} (-1)^{i+k+1} C(k,i) C(x+in,k) x/(x+in) = x/(x+kn) C(x+kn,k) + (-1)^k C(x,k)", "Rational",
      Mode::pointwise, {{"x", 1}, {"n", 1}, {"k", 1}}, {{"x", span(1, 6)}, {"n", span(1, 6)}, {"k", span(1, 8)}},
      eval_eq36);
  add("eq37", "sum_{i=1}^{k} (-1)^{i-1} C(k,i) C(x+in,k) / (x+in) = 0", "Rational", Mode::pointwise,
      {{"x", 1}, {"n", 1}, {"k", 2}}, {{"x", span(1, 9)}, {"n", span(1, 6)}, {"k", span(2, 10)}}, eval_eq37,
      "x < k", [](const Binding& b) { return get(b, "x") < get(b, "k"); });
  add("eq38", "sum_{i=1}^{k} (-1)^{i-1}/i C(in,k) C(k,i) = (-1)^{k-1} n/k", "Rational", Mode::pointwise,
      {{"k", 1}, {"n", 0}}, {{"k", span(1, 15)}, {"n", span(1, 15)}}, eval_eq38);
  add("eq41", "s(n,t) sum_{i=1}^{n} (-1)^{i-1} C(n,i) i^{t-1} = 0, t >= 2", "Integer", Mode::pointwise,
      {{"n", 1}, {"t", 2}}, {{"n", span(1, 12)}, {"t", span(2, 12)}}, eval_eq41);
  add("eq42", "sum_{r=1}^{k} (-1)^{k-r} sum_{k_1+...+k_r=k, k_i>=1} prod C(n+k_i-1,k_i) = C(n,k)", "Integer",
      Mode::pointwise, {{"k", 1}, {"n", 1}}, {{"k", span(1, 10)}, {"n", span(1, 10)}}, eval_eq42);
  add("eq47", "sum_{i=1}^{k} (-1)^i C(ni+k-1,k) C(k+1,i+1) = (-1)^k C(n,k)", "Polynomial", Mode::polynomial_in_n,
      {{"k", 1}, {"n", 0, true}}, {{"k", span(1, 20)}}, eval_eq47);

  {
    Entry e;
    e.descriptor.id = "lemma7_roundtrip";
    e.descriptor.statement = "random e_1..e_k -> h via composition transform -> e via composition transform";
    e.descriptor.ring = "Rational";
    e.descriptor.params = {{"k", 1}, {"sample", 0, true}};
    e.descriptor.default_ranges = {{"k", span(1, 8)}};
    e.descriptor.randomized = true;
    e.evaluate = eval_lemma7;
    e.draws = Draws::sequence;
    r.push_back(std::move(e));
  }

  add_pair(r, 1, PairId::tree, "a(a-k)^{k-1}/k!", "a(a+k)^{k-1}/k!", "Rational");
  add_pair(r, 2, PairId::bernoulli, "(-1)^k a^k B_k/k!", "a^k/(k+1)!", "Rational");
  add_pair(r, 3, PairId::q_binomial, "q^{k(k-1)/2} [n,k]_q", "[n+k-1,k]_q", "Polynomial");
  add_pair(r, 4, PairId::q_exp, "q^{k(k-1)/2}/phi_k(q)", "1/phi_k(q)", "RationalFunction");
  add_pair(r, 5, PairId::q_cauchy, "prod_{i=1}^{k} (a-bq^{i-1})/(1-q^i)", "prod_{i=1}^{k} (aq^{i-1}-b)/(1-q^i)",
           "RationalFunction");
  return r;
}

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries = build_registry();
  return entries;
}

const Entry& find_entry(std::string_view id) {
  for (const auto& e : registry()) {
    if (e.descriptor.id == id) return e;
  }
  throw UnknownIdentity("unknown identity id '" + std::string(id) + "'");
}

const ParamSlot* find_slot(const IdentityDescriptor& d, const std::string& name) {
  for (const auto& s : d.params) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

void check_binding(const Entry& entry, const Binding& params) {
  const auto& d = entry.descriptor;
  for (const auto& [name, value] : params) {
    const ParamSlot* slot = find_slot(d, name);
    if (slot == nullptr) throw DomainError(d.id + " has no parameter '" + name + "'");
    if (value < slot->min) {
      throw DomainError(d.id + " requires " + name + " >= " + std::to_string(slot->min) + ", got " +
                        std::to_string(value));
    }
  }
  for (const auto& slot : d.params) {
    if (!slot.optional && !params.contains(slot.name)) {
      throw DomainError(d.id + " requires parameter '" + slot.name + "'");
    }
  }
  if (entry.constraint && !entry.constraint(params)) {
    throw DomainError(d.id + " requires " + d.constraint);
  }
}

// Number of distinct random draws; fixed a (and b) collapse the sample axis.
std::int64_t sample_count(const Entry& entry, const RandomPolicy& policy) {
  switch (entry.draws) {
    case Draws::none: return 0;
    case Draws::sequence: return policy.sequence_samples;
    case Draws::a: return policy.a ? 1 : policy.samples;
    case Draws::ab: return (policy.a && policy.b) ? 1 : policy.samples;
  }
  return 0;
}

}  // namespace

std::string_view to_string(Mode mode) {
  return mode == Mode::pointwise ? "pointwise" : "polynomial_in_n";
}

Range Range::parse(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    std::int64_t v = 0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    if (first != last && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (s.empty() || ec != std::errc() || ptr != last) {
      throw DomainError("malformed range '" + std::string(text) + "' (expected LO..HI)");
    }
    return v;
  };
  Range r;
  auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    r.lo = r.hi = parse_int(text);
  } else {
    r.lo = parse_int(text.substr(0, dots));
    r.hi = parse_int(text.substr(dots + 2));
  }
  if (r.lo > r.hi) throw DomainError("empty range '" + std::string(text) + "'");
  return r;
}

std::string Range::str() const { return std::to_string(lo) + ".." + std::to_string(hi); }

const std::vector<IdentityDescriptor>& list_identities() {
  static const std::vector<IdentityDescriptor> out = [] {
    std::vector<IdentityDescriptor> ds;
    for (const auto& e : registry()) ds.push_back(e.descriptor);
    return ds;
  }();
  return out;
}

const IdentityDescriptor& lookup_identity(std::string_view id) { return find_entry(id).descriptor; }

std::pair<Rational, Rational> sample_ab(const RandomPolicy& policy, std::uint64_t sample) {
  // Stream offset keeps a/b draws apart from the random e-sequences.
  RationalSampler sampler(policy.seed, sample + (std::uint64_t{1} << 32));
  Rational a = policy.a ? *policy.a : sampler.next();
  Rational b = policy.b ? *policy.b : sampler.next();
  while (!policy.b && b == a) b = sampler.next();
  return {std::move(a), std::move(b)};
}

CaseReport verify_case(std::string_view id, const Binding& params, const RandomPolicy& policy) {
  const Entry& entry = find_entry(id);
  check_binding(entry, params);
  const auto start = std::chrono::steady_clock::now();
  CaseValues values = entry.evaluate(params, policy);
  CaseReport report;
  report.elapsed = std::chrono::steady_clock::now() - start;
  report.id = entry.descriptor.id;
  for (const auto& slot : entry.descriptor.params) {
    auto it = params.find(slot.name);
    if (it != params.end()) report.params.emplace_back(slot.name, std::to_string(it->second));
  }
  for (auto& p : values.extra_params) report.params.push_back(std::move(p));
  report.lhs = std::move(values.lhs);
  report.rhs = std::move(values.rhs);
  report.pass = values.pass;
  return report;
}

SuiteReport verify_range(std::string_view id, const RangeMap& ranges, const RandomPolicy& policy, unsigned jobs) {
  const Entry& entry = find_entry(id);
  const auto& d = entry.descriptor;
  if (jobs < 1) throw DomainError("jobs must be >= 1");
  if (d.randomized && (policy.samples < 1 || policy.sequence_samples < 1)) throw DomainError("samples must be >= 1");

  RangeMap effective = d.default_ranges;
  for (const auto& [name, range] : ranges) {
    const ParamSlot* slot = find_slot(d, name);
    if (slot == nullptr || name == "sample") throw DomainError(d.id + " has no parameter '" + name + "'");
    if (range.lo > range.hi) throw DomainError("empty range for '" + name + "'");
    if (range.lo < slot->min) {
      throw DomainError(d.id + " requires " + name + " >= " + std::to_string(slot->min) + ", got range " +
                        range.str());
    }
    effective[name] = range;
  }
  if (const auto count = sample_count(entry, policy); count > 0) effective["sample"] = span(0, count - 1);

  // Expand in slot order so the first slot varies slowest.
  std::vector<std::pair<std::string, Range>> axes;
  for (const auto& slot : d.params) {
    auto it = effective.find(slot.name);
    if (it != effective.end()) axes.emplace_back(slot.name, it->second);
  }
  std::vector<Binding> cases;
  Binding current;
  std::function<void(std::size_t)> expand = [&](std::size_t axis) {
    if (axis == axes.size()) {
      if (!entry.constraint || entry.constraint(current)) cases.push_back(current);
      return;
    }
    for (std::int64_t v = axes[axis].second.lo; v <= axes[axis].second.hi; ++v) {
      current[axes[axis].first] = v;
      expand(axis + 1);
    }
  };
  expand(0);
  if (cases.empty()) throw DomainError("no parameter combination satisfies " + d.id + "'s domain (" + d.constraint + ")");

  const auto start = std::chrono::steady_clock::now();
  std::vector<CaseReport> results(cases.size());
  std::vector<std::exception_ptr> errors(cases.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cases.size(); i = next++) {
      try {
        results[i] = verify_case(id, cases[i], policy);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned workers = std::min<std::size_t>(jobs, cases.size());
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  for (const auto& err : errors) {
    if (err) std::rethrow_exception(err);
  }

  SuiteReport suite;
  suite.id = d.id;
  suite.cases_total = results.size();
  for (auto& r : results) {
    if (r.pass) continue;
    ++suite.cases_failed;
    if (suite.first_failures.size() < kMaxReportedFailures) suite.first_failures.push_back(std::move(r));
  }
  suite.elapsed = std::chrono::steady_clock::now() - start;
  return suite;
}

CaseReport verify_polynomial_in_n(std::string_view id, int k) {
  const Polynomial n = Polynomial::x();
  auto c = [](const Integer& v) { return Polynomial(v); };
  Polynomial lhs;
  Polynomial rhs;
  if (id == "eq13") {
    if (k < 1) throw DomainError("eq13 requires k >= 1");
    for (int i = 1; i <= k; ++i) {
      lhs += poly_binomial(n * Rational(i), k) * Rational(sign_pow(i) * binomial(Integer(k + 1), i + 1));
    }
    rhs = poly_binomial(n + c(Integer(k - 1)), k) * Rational(sign_pow(k));
  } else if (id == "eq29") {
    if (k < 2) throw DomainError("eq29 requires k >= 2");
    for (int i = 1; i <= k; ++i) {
      lhs += (poly_binomial((n - Polynomial(1)) * Rational(i), k) - poly_binomial(n * Rational(i), k)) *
             Rational(sign_pow(i) * binomial(Integer(k + 1), i + 1));
    }
    for (int i = 1; i <= k - 1; ++i) {
      rhs += poly_binomial(n * Rational(i), k - 1) * Rational(sign_pow(i) * binomial(Integer(k), i + 1));
    }
  } else if (id == "eq47") {
    if (k < 1) throw DomainError("eq47 requires k >= 1");
    for (int i = 1; i <= k; ++i) {
      lhs += poly_binomial(n * Rational(i) + c(Integer(k - 1)), k) *
             Rational(sign_pow(i) * binomial(Integer(k + 1), i + 1));
    }
    rhs = poly_binomial(n, k) * Rational(sign_pow(k));
  } else {
    (void)find_entry(id);
    throw DomainError("'" + std::string(id) + "' has no polynomial-in-n form");
  }
  CaseReport report;
  report.id = std::string(id);
  report.params = {{"k", std::to_string(k)}};
  report.lhs = lhs.str();
  report.rhs = rhs.str();
  report.pass = lhs == rhs;
  return report;
}

CaseReport check_eq17_coefficients(int k) {
  if (k < 1) throw DomainError("eq17 requires k >= 1");
  const Polynomial ff = falling_factorial_poly(k);
  Polynomial lhs;
  for (int i = 1; i <= k; ++i) {
    lhs += ff.compose(Polynomial::monomial(Rational(i), 1)) * Rational(sign_pow(i) * binomial(Integer(k + 1), i + 1));
  }
  std::vector<Rational> expected(static_cast<std::size_t>(k) + 1);
  for (int t = 1; t <= k; ++t) expected[static_cast<std::size_t>(t)] = Rational(sign_pow(t) * stirling1(k, t));
  const Polynomial rhs = Polynomial::from_coeffs(std::move(expected));
  CaseReport report;
  report.id = "eq17";
  report.params = {{"k", std::to_string(k)}};
  report.lhs = lhs.str();
  report.rhs = rhs.str();
  report.pass = lhs == rhs;
  return report;
}

Rational rothe_hagen_A(const Integer& x, const Integer& n, std::int64_t k) {
  const Integer top = x + Integer(k) * n;
  if (top.is_zero()) throw DomainError("Rothe-Hagen coefficient undefined: x + kn = 0");
  return Rational(x, top) * Rational(binomial(top, k));
}

Rational rothe_hagen_A_sum(const Integer& x, const Integer& n, std::int64_t k) {
  if (k < 1) throw DomainError("rothe_hagen_A_sum requires k >= 1");
  Rational acc(0);
  for (std::int64_t i = 0; i < k; ++i) {
    const Integer top = x + Integer(i) * n;
    if (top.is_zero()) throw DomainError("Rothe-Hagen sum undefined: x + in = 0");
    acc += Rational(sign_pow(i + k + 1) * binomial(Integer(k), i) * binomial(top, k)) * Rational(x, top);
  }
  return acc;
}

nlohmann::ordered_json to_json(const CaseReport& report) {
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [name, value] : report.params) params[name] = value;
  return {{"id", report.id}, {"params", params}, {"lhs", report.lhs}, {"rhs", report.rhs}, {"pass", report.pass}};
}

nlohmann::ordered_json to_json(const SuiteReport& report, bool include_timing) {
  auto failures = nlohmann::ordered_json::array();
  for (const auto& f : report.first_failures) failures.push_back(to_json(f));
  const auto ms = include_timing ? std::chrono::duration_cast<std::chrono::milliseconds>(report.elapsed).count() : 0;
  return {{"id", report.id},
          {"cases", report.cases_total},
          {"failed", report.cases_failed},
          {"failures", failures},
          {"elapsed_ms", ms}};
}

nlohmann::ordered_json to_json(const IdentityDescriptor& d) {
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& s : d.params) params[s.name] = ">= " + std::to_string(s.min) + (s.optional ? " (optional)" : "");
  nlohmann::ordered_json defaults = nlohmann::ordered_json::object();
  for (const auto& s : d.params) {
    auto it = d.default_ranges.find(s.name);
    if (it != d.default_ranges.end()) defaults[s.name] = it->second.str();
  }
  return {{"id", d.id},         {"mode", to_string(d.mode)},   {"ring", d.ring},
          {"params", params},   {"constraint", d.constraint},  {"defaults", defaults},
          {"randomized", d.randomized}, {"statement", d.statement}};
}

}  // namespace compident
