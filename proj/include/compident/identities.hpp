#pragma once

// Registry of composition-generated identities and the engine that checks
// both sides exactly, either pointwise over integer parameter grids or as
// polynomial identities in n.
//
// Identity ids (frozen): eq5 eq6 eq13 eq17 eq18 eq19 eq29 eq31 eq36 eq37
// eq38 eq41 eq42 eq47 lemma7_roundtrip pair{1..5}_{eh,he}.

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "compident/exact_arith.hpp"
#include "compident/symfun.hpp"

namespace compident {

class UnknownIdentity : public DomainError {
 public:
  using DomainError::DomainError;
};

enum class Mode { pointwise, polynomial_in_n };

std::string_view to_string(Mode mode);

struct ParamSlot {
  std::string name;
  std::int64_t min = 0;
  /// Optional slots switch evaluation mode when bound (n for the
  /// polynomial-in-n identities).
  bool optional = false;
};

struct Range {
  std::int64_t lo = 0;
  std::int64_t hi = 0;

  /// Parses "LO..HI" or a single integer "N" (meaning N..N).
  static Range parse(std::string_view text);
  std::string str() const;
  friend bool operator==(const Range&, const Range&) = default;
};

using Binding = std::map<std::string, std::int64_t>;
using RangeMap = std::map<std::string, Range>;

struct IdentityDescriptor {
  std::string id;
  /// The identity written out as a formula.
  std::string statement;
  std::string ring;
  Mode mode = Mode::pointwise;
  std::vector<ParamSlot> params;
  /// Relational constraint between parameters, empty if none.
  std::string constraint;
  RangeMap default_ranges;
  /// Draws random rationals (sample slot) under a RandomPolicy.
  bool randomized = false;
};

/// How symbolic parameters a, b and random e-sequences are bound.
struct RandomPolicy {
  std::uint64_t seed = kDefaultSeed;
  /// Draws of a (and b) per case.
  unsigned samples = 5;
  /// Random e-sequences per case for the composition-transform round trip.
  unsigned sequence_samples = 20;
  std::optional<Rational> a;
  std::optional<Rational> b;
};

struct CaseReport {
  std::string id;
  std::vector<std::pair<std::string, std::string>> params;
  std::string lhs;
  std::string rhs;
  bool pass = false;
  std::chrono::nanoseconds elapsed{0};
};

struct SuiteReport {
  std::string id;
  std::size_t cases_total = 0;
  std::size_t cases_failed = 0;
  std::vector<CaseReport> first_failures;  // at most kMaxReportedFailures
  std::chrono::nanoseconds elapsed{0};

  bool passed() const { return cases_failed == 0; }
};

inline constexpr std::size_t kMaxReportedFailures = 10;

const std::vector<IdentityDescriptor>& list_identities();

/// Throws UnknownIdentity.
const IdentityDescriptor& lookup_identity(std::string_view id);

/// Evaluates one case. Throws UnknownIdentity, DomainError for bindings
/// outside the descriptor's domain, BudgetExceeded from enumeration.
CaseReport verify_case(std::string_view id, const Binding& params, const RandomPolicy& policy = {});

/// Cartesian product of the ranges (descriptor defaults fill unspecified
/// slots), skipping combinations that violate the relational constraint.
/// Cases are reported in parameter order regardless of `jobs`.
SuiteReport verify_range(std::string_view id, const RangeMap& ranges, const RandomPolicy& policy = {},
                         unsigned jobs = 1);

/// Both sides of eq13, eq29 or eq47 as exact polynomials in n.
CaseReport verify_polynomial_in_n(std::string_view id, int k);

/// Coefficients of sum_{i=1}^{k} (-1)^i C(k+1, i+1) (in)(in-1)...(in-k+1)
/// against (-1)^t s(k, t), constant term zero.
CaseReport check_eq17_coefficients(int k);

/// x / (x + kn) * C(x + kn, k). Throws DomainError when x + kn = 0.
Rational rothe_hagen_A(const Integer& x, const Integer& n, std::int64_t k);

/// sum_{i=0}^{k-1} (-1)^{i+k+1} C(k, i) C(x + in, k) x / (x + in), k >= 1.
Rational rothe_hagen_A_sum(const Integer& x, const Integer& n, std::int64_t k);

/// Random a (and b != a) for sample `sample`, with fixed values from the
/// policy taking precedence.
std::pair<Rational, Rational> sample_ab(const RandomPolicy& policy, std::uint64_t sample);

nlohmann::ordered_json to_json(const CaseReport& report);
/// elapsed_ms is reported as 0 unless include_timing is set, so that
/// identical invocations give identical bytes.
nlohmann::ordered_json to_json(const SuiteReport& report, bool include_timing = false);
nlohmann::ordered_json to_json(const IdentityDescriptor& descriptor);

}  // namespace compident
