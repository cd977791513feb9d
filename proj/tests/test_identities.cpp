#include <doctest.h>

#include <set>

#include "compident/compositions.hpp"
#include "compident/identities.hpp"

using namespace compident;

namespace {

std::string param(const CaseReport& r, const std::string& name) {
  for (const auto& [n, v] : r.params) {
    if (n == name) return v;
  }
  return {};
}

}  // namespace

TEST_CASE("registry") {
  const std::vector<std::string> expected{
      "eq5",      "eq6",      "eq13",     "eq17",     "eq18",     "eq19",     "eq29",     "eq31",     "eq36",
      "eq37",     "eq38",     "eq41",     "eq42",     "eq47",     "lemma7_roundtrip",     "pair1_eh", "pair1_he",
      "pair2_eh", "pair2_he", "pair3_eh", "pair3_he", "pair4_eh", "pair4_he", "pair5_eh", "pair5_he"};
  std::vector<std::string> ids;
  for (const auto& d : list_identities()) ids.push_back(d.id);
  CHECK(ids == expected);

  const auto& eq5 = lookup_identity("eq5");
  CHECK(eq5.mode == Mode::pointwise);
  CHECK(eq5.ring == "Integer");
  CHECK(eq5.default_ranges.at("k") == Range{1, 10});
  CHECK(eq5.default_ranges.at("n") == Range{0, 10});
  CHECK(lookup_identity("eq13").mode == Mode::polynomial_in_n);
  CHECK(lookup_identity("pair5_eh").randomized);
  CHECK_FALSE(lookup_identity("pair3_eh").randomized);
  CHECK_THROWS_AS(lookup_identity("eq99"), UnknownIdentity);
  for (const auto& d : list_identities()) {
    CHECK_FALSE(d.statement.empty());
    CHECK(d.default_ranges.contains(d.params.front().name));
  }
}

TEST_CASE("Range parsing") {
  CHECK(Range::parse("1..8") == Range{1, 8});
  CHECK(Range::parse("5") == Range{5, 5});
  CHECK(Range::parse("-2..3") == Range{-2, 3});
  CHECK(Range{0, 12}.str() == "0..12");
  for (const char* bad : {"", "..", "1..", "a..3", "1...3", "3..1", "1.5"}) {
    CHECK_THROWS_AS(Range::parse(bad), DomainError);
  }
}

TEST_CASE("verify_case examples") {
  auto r = verify_case("eq5", {{"k", 3}, {"n", 2}});
  CHECK(r.lhs == "4");
  CHECK(r.rhs == "4");
  CHECK(r.pass);
  CHECK(r.params == std::vector<std::pair<std::string, std::string>>{{"k", "3"}, {"n", "2"}});

  r = verify_case("eq5", {{"k", 4}, {"n", 0}});
  CHECK(r.lhs == "0");
  CHECK(r.pass);

  r = verify_case("eq38", {{"k", 2}, {"n", 1}});
  CHECK(r.rhs == "-1/2");
  CHECK(r.pass);

  r = verify_case("eq42", {{"k", 3}, {"n", 5}});
  CHECK(r.rhs == "10");
  CHECK(r.pass);

  r = verify_case("eq37", {{"x", 1}, {"n", 1}, {"k", 2}});
  CHECK(r.lhs == "0");
  CHECK(r.pass);

  r = verify_case("eq36", {{"x", 2}, {"n", 1}, {"k", 3}});
  CHECK(r.pass);

  r = verify_case("eq6", {{"k", 2}, {"n", 4}});
  CHECK(r.rhs == "10");
  CHECK(r.pass);
}

TEST_CASE("verify_case domain errors") {
  CHECK_THROWS_AS(verify_case("nope", {{"k", 1}}), UnknownIdentity);
  CHECK_THROWS_AS(verify_case("eq5", {{"k", 0}, {"n", 1}}), DomainError);
  CHECK_THROWS_AS(verify_case("eq5", {{"k", 1}}), DomainError);
  CHECK_THROWS_AS(verify_case("eq5", {{"k", 1}, {"n", 1}, {"t", 1}}), DomainError);
  CHECK_THROWS_AS(verify_case("eq19", {{"k", 2}, {"t", 3}}), DomainError);
  CHECK_THROWS_AS(verify_case("eq37", {{"x", 3}, {"n", 1}, {"k", 3}}), DomainError);
  CHECK_THROWS_AS(verify_case("eq29", {{"k", 1}}), DomainError);
  CHECK_THROWS_AS(verify_case("eq5", {{"k", 21}, {"n", 1}}), BudgetExceeded);
}

TEST_CASE("verify_range counts and ordering") {
  auto s = verify_range("eq5", {{"k", Range{1, 8}}, {"n", Range{0, 8}}});
  CHECK(s.cases_total == 72);
  CHECK(s.passed());
  CHECK(s.first_failures.empty());

  s = verify_range("eq19", {{"k", Range{1, 25}}, {"t", Range{1, 25}}});
  CHECK(s.cases_total == 325);
  CHECK(s.passed());

  s = verify_range("eq37", {});
  CHECK(s.cases_total == 6 * (9 * 10 / 2 - 0));
  CHECK(s.passed());

  CHECK(verify_range("pair5_eh", {{"k", Range{1, 3}}}).cases_total == 15);
  RandomPolicy fixed;
  fixed.a = Rational(2);
  fixed.b = Rational(3);
  CHECK(verify_range("pair5_eh", {{"k", Range{1, 3}}}, fixed).cases_total == 3);
  CHECK(verify_range("lemma7_roundtrip", {{"k", Range{1, 2}}}).cases_total == 40);

  CHECK_THROWS_AS(verify_range("eq5", {{"k", Range{0, 3}}}), DomainError);
  CHECK_THROWS_AS(verify_range("eq5", {{"x", Range{1, 3}}}), DomainError);
  CHECK_THROWS_AS(verify_range("eq19", {{"k", Range{1, 2}}, {"t", Range{5, 6}}}), DomainError);
  CHECK_THROWS_AS(verify_range("eq5", {}, {}, 0), DomainError);
  CHECK_THROWS_AS(verify_range("eq5", {{"k", Range{1, 21}}}), BudgetExceeded);
}

TEST_CASE("verify_range is independent of the worker count") {
  RandomPolicy policy;
  policy.seed = 11;
  const auto one = verify_range("pair2_eh", {{"k", Range{1, 6}}}, policy, 1);
  const auto four = verify_range("pair2_eh", {{"k", Range{1, 6}}}, policy, 4);
  CHECK(to_json(one).dump() == to_json(four).dump());
  CHECK(one.passed());
}

TEST_CASE("failure reports are truncated and serialized in parameter order") {
  SuiteReport s;
  s.id = "x";
  s.cases_total = 3;
  s.cases_failed = 1;
  s.first_failures.push_back(CaseReport{"x", {{"k", "2"}, {"n", "1"}}, "1/2", "3", false, {}});
  const auto j = to_json(s);
  CHECK(j.dump() ==
        R"({"id":"x","cases":3,"failed":1,"failures":[{"id":"x","params":{"k":"2","n":"1"},"lhs":"1/2","rhs":"3","pass":false}],"elapsed_ms":0})");
  CHECK_FALSE(s.passed());
}

TEST_CASE("random draws") {
  RandomPolicy policy;
  for (std::uint64_t s = 0; s < 50; ++s) {
    const auto [a, b] = sample_ab(policy, s);
    CHECK_FALSE(a == b);
    CHECK(sample_ab(policy, s) == std::pair{a, b});
  }
  policy.a = Rational(3, 4);
  CHECK(sample_ab(policy, 0).first == Rational(3, 4));
  auto r = verify_case("pair1_eh", {{"k", 3}, {"sample", 0}}, policy);
  CHECK(param(r, "a") == "3/4");
  CHECK(r.pass);
}

TEST_CASE("Rothe-Hagen coefficient") {
  CHECK(rothe_hagen_A(Integer(1), Integer(1), 2) == Rational(1));
  CHECK(rothe_hagen_A(Integer(2), Integer(1), 3) == Rational(4));
  CHECK_THROWS_AS(rothe_hagen_A(Integer(-2), Integer(1), 2), DomainError);
  for (long x = 1; x <= 6; ++x) {
    for (long n = 0; n <= 6; ++n) {
      for (std::int64_t k = 1; k <= 8; ++k) {
        CHECK(rothe_hagen_A(Integer(x), Integer(n), k) == rothe_hagen_A_sum(Integer(x), Integer(n), k));
      }
    }
  }
}

TEST_CASE("polynomial-in-n identities") {
  auto r = verify_polynomial_in_n("eq13", 2);
  CHECK(r.lhs == "[0, 1/2, 1/2]");
  CHECK(r.pass);
  r = verify_polynomial_in_n("eq13", 1);
  CHECK(r.rhs == "[0, -1]");
  CHECK(r.pass);
  r = verify_polynomial_in_n("eq47", 3);
  CHECK(r.rhs == "[0, -1/3, 1/2, -1/6]");
  CHECK(r.pass);
  CHECK(verify_polynomial_in_n("eq29", 2).pass);
  CHECK_THROWS_AS(verify_polynomial_in_n("eq29", 1), DomainError);
  CHECK_THROWS_AS(verify_polynomial_in_n("eq5", 3), DomainError);
  CHECK_THROWS_AS(verify_polynomial_in_n("eqx", 3), UnknownIdentity);
  for (int k = 1; k <= 12; ++k) {
    for (std::int64_t n = 0; n <= 12; ++n) {
      CHECK(verify_case("eq13", {{"k", k}, {"n", n}}).pass);
      CHECK(verify_case("eq47", {{"k", k}, {"n", n}}).pass);
    }
  }
}

TEST_CASE("falling-factorial coefficient law") {
  auto r = check_eq17_coefficients(1);
  CHECK(r.rhs == "[0, -1]");
  CHECK(r.pass);
  r = check_eq17_coefficients(2);
  CHECK(r.rhs == "[0, 1, 1]");
  CHECK(r.pass);
  r = check_eq17_coefficients(6);
  CHECK(r.rhs == "[0, 120, 274, 225, 85, 15, 1]");
  CHECK(r.pass);
  CHECK_THROWS_AS(check_eq17_coefficients(0), DomainError);
}

TEST_CASE("enumeration LHS equals the hockey-stick closed form") {
  for (int k = 1; k <= 8; ++k) {
    for (long n = 0; n <= 6; ++n) {
      Integer via_inner(0);
      for (int r = 1; r <= k; ++r) via_inner += sign_pow(k - r) * inner_sum_closed_binomial(Integer(n), k, r);
      Integer via_hockey(0);
      for (int i = 1; i <= k; ++i) {
        via_hockey += sign_pow(i) * binomial(Integer(n * i), k) * binomial(Integer(k + 1), i + 1);
      }
      via_hockey = sign_pow(k) * via_hockey;
      const Integer target = binomial(Integer(n + k - 1), k);
      CHECK(via_inner == target);
      CHECK(via_hockey == target);
      CHECK(verify_case("eq5", {{"k", k}, {"n", n}}).lhs == target.str());
    }
  }
}

TEST_CASE("descriptor JSON") {
  const auto j = to_json(lookup_identity("eq19"));
  CHECK(j["id"] == "eq19");
  CHECK(j["mode"] == "pointwise");
  CHECK(j["constraint"] == "t <= k");
  CHECK(j["defaults"]["k"] == "1..25");
  std::set<std::string> keys;
  for (const auto& [key, _] : j.items()) keys.insert(key);
  CHECK(keys == std::set<std::string>{"id", "mode", "ring", "params", "constraint", "defaults", "randomized",
                                      "statement"});
}

TEST_CASE("every identity passes at its default ranges") {
  for (const auto& d : list_identities()) {
    if (d.id.starts_with("pair5")) continue;  // covered by the acceptance suite
    CAPTURE(d.id);
    CHECK(verify_range(d.id, {}).passed());
  }
}
