#include "compident/cli.hpp"

#include <CLI11.hpp>

#include <optional>
#include <ostream>

#include "compident/compositions.hpp"
#include "compident/identities.hpp"
#include "compident/stirling.hpp"
#include "compident/symfun.hpp"

namespace compident::cli {

namespace {

enum class Format { json, text };

struct VerifyFlags {
  std::string id;
  bool all = false;
  std::optional<std::string> k, n, t, x;
  std::optional<std::string> a, b;
  std::uint64_t seed = kDefaultSeed;
  unsigned samples = 5;
  bool samples_given = false;
  unsigned jobs = 1;
  bool timing = false;
};

struct TableFlags {
  std::string kind;
  std::optional<int> n, k, max;
};

struct CompositionFlags {
  int k = 0;
  std::optional<int> r;
};

void add_format(CLI::App* cmd, std::string& format) {
  cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
}

std::string params_text(const CaseReport& c) {
  std::string out;
  for (const auto& [name, value] : c.params) {
    if (!out.empty()) out += " ";
    out += name + "=" + value;
  }
  return out;
}

void emit_suite(const SuiteReport& suite, Format format, bool timing, std::ostream& out) {
  if (format == Format::json) {
    out << to_json(suite, timing).dump() << '\n';
    return;
  }
  out << suite.id << ": " << (suite.passed() ? "PASS" : "FAIL") << " (" << suite.cases_total << " cases, "
      << suite.cases_failed << " failed";
  if (timing) out << ", " << std::chrono::duration_cast<std::chrono::milliseconds>(suite.elapsed).count() << " ms";
  out << ")\n";
  for (const auto& f : suite.first_failures) {
    out << "  " << params_text(f) << ": lhs = " << f.lhs << ", rhs = " << f.rhs << '\n';
  }
}

int run_verify(const VerifyFlags& flags, Format format, std::ostream& out) {
  RandomPolicy policy;
  policy.seed = flags.seed;
  policy.samples = flags.samples;
  if (flags.samples_given) policy.sequence_samples = flags.samples;
  if (flags.a) policy.a = Rational::parse(*flags.a);
  if (flags.b) policy.b = Rational::parse(*flags.b);

  RangeMap ranges;
  const std::pair<const char*, const std::optional<std::string>*> range_flags[] = {
      {"k", &flags.k}, {"n", &flags.n}, {"t", &flags.t}, {"x", &flags.x}};
  for (const auto& [name, value] : range_flags) {
    if (*value) ranges[name] = Range::parse(**value);
  }

  std::vector<std::string> ids;
  if (flags.all) {
    if (!flags.id.empty() || !ranges.empty()) throw DomainError("--all cannot be combined with --id or ranges");
    for (const auto& d : list_identities()) ids.push_back(d.id);
  } else {
    if (flags.id.empty()) throw DomainError("verify needs --id ID or --all");
    ids.push_back(flags.id);
  }

  int code = kExitPass;
  for (const auto& id : ids) {
    if (emit_reports({verify_range(id, ranges, policy, flags.jobs)}, format == Format::json, flags.timing, out) ==
        kExitFail) {
      code = kExitFail;
    }
  }
  return code;
}

int run_list(Format format, std::ostream& out) {
  for (const auto& d : list_identities()) {
    if (format == Format::json) {
      out << to_json(d).dump() << '\n';
      continue;
    }
    std::string params;
    for (const auto& s : d.params) {
      params += (params.empty() ? "" : " ") + s.name + ">=" + std::to_string(s.min) + (s.optional ? "?" : "");
    }
    if (!d.constraint.empty()) params += ", " + d.constraint;
    out << d.id << "  [" << to_string(d.mode) << ", " << d.ring << "]  " << params << "\n    " << d.statement
        << '\n';
  }
  return kExitPass;
}

template <class Row>
void emit_rows(const std::vector<Row>& rows, Format format, std::ostream& out) {
  if (format == Format::json) {
    auto arr = nlohmann::json::array();
    for (const auto& row : rows) {
      auto jr = nlohmann::json::array();
      for (const auto& v : row) jr.push_back(v);
      arr.push_back(std::move(jr));
    }
    out << arr.dump() << '\n';
    return;
  }
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? " " : "") << row[i];
    out << '\n';
  }
}

void emit_list(const std::vector<std::string>& values, Format format, std::ostream& out) {
  if (format == Format::json) {
    out << nlohmann::json(values).dump() << '\n';
    return;
  }
  for (std::size_t i = 0; i < values.size(); ++i) out << (i ? " " : "") << values[i];
  out << '\n';
}

int run_table(const TableFlags& flags, Format format, std::ostream& out) {
  if (flags.kind == "stirling") {
    if (!flags.n) throw DomainError("table stirling needs --n N");
    if (*flags.n < 1) throw DomainError("table stirling needs N >= 1");
    const StirlingTable table(*flags.n);
    std::vector<std::vector<std::string>> rows;
    for (int n = 1; n <= *flags.n; ++n) {
      std::vector<std::string> row;
      for (int t = 1; t <= n; ++t) row.push_back(table.at(n, t).str());
      rows.push_back(std::move(row));
    }
    emit_rows(rows, format, out);
  } else if (flags.kind == "bernoulli") {
    if (!flags.max) throw DomainError("table bernoulli needs --max M");
    if (*flags.max < 0) throw DomainError("table bernoulli needs M >= 0");
    std::vector<std::string> values;
    for (int m = 0; m <= *flags.max; ++m) values.push_back(bernoulli(m).str());
    emit_list(values, format, out);
  } else if (flags.kind == "gaussian") {
    if (!flags.n || !flags.k) throw DomainError("table gaussian needs --n N --k K");
    std::vector<std::string> values;
    const Polynomial g = gaussian_binomial(*flags.n, *flags.k);
    for (const auto& c : g.coeffs()) values.push_back(c.str());
    emit_list(values, format, out);
  } else {
    throw DomainError("unknown table '" + flags.kind + "' (expected stirling, bernoulli or gaussian)");
  }
  return kExitPass;
}

int run_compositions(const CompositionFlags& flags, Format format, std::ostream& out) {
  if (flags.k < 1) throw DomainError("compositions needs k >= 1");
  check_enumeration_budget(flags.k);
  int r_first = flags.k;
  int r_last = 1;
  if (flags.r) {
    if (*flags.r < 1 || *flags.r > flags.k) throw DomainError("compositions needs 1 <= r <= k");
    r_first = r_last = *flags.r;
  }
  std::vector<std::vector<std::string>> rows;
  auto json_rows = nlohmann::json::array();
  // Most parts first, so the listing runs from 1,1,...,1 down to k.
  for (int r = r_first; r >= r_last; --r) {
    CompositionEnumerator it(flags.k, r);
    while (it.next()) {
      const auto& parts = it.current().parts;
      if (format == Format::json) {
        auto row = nlohmann::json::array();
        for (int p : parts) row.push_back(std::to_string(p));
        json_rows.push_back(std::move(row));
      } else {
        for (std::size_t i = 0; i < parts.size(); ++i) out << (i ? "," : "") << parts[i];
        out << '\n';
      }
    }
  }
  if (format == Format::json) out << json_rows.dump() << '\n';
  return kExitPass;
}

}  // namespace

int emit_reports(const std::vector<SuiteReport>& suites, bool json, bool timing, std::ostream& out) {
  int code = kExitPass;
  for (const auto& suite : suites) {
    emit_suite(suite, json ? Format::json : Format::text, timing, out);
    if (!suite.passed()) code = kExitFail;
  }
  return code;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of composition-generated identities", "compident"};
  app.require_subcommand(1);

  std::string format_text = "text";
  VerifyFlags vf;
  TableFlags tf;
  CompositionFlags cf;

  auto* verify = app.add_subcommand("verify", "Verify identities over parameter ranges");
  verify->add_option("--id", vf.id, "Identity id (see `list`)");
  verify->add_flag("--all", vf.all, "Verify every identity at its default ranges");
  verify->add_option("--k", vf.k, "Range LO..HI for k");
  verify->add_option("--n", vf.n, "Range LO..HI for n");
  verify->add_option("--t", vf.t, "Range LO..HI for t");
  verify->add_option("--x", vf.x, "Range LO..HI for x");
  verify->add_option("--a", vf.a, "Fix parameter a (P/Q)");
  verify->add_option("--b", vf.b, "Fix parameter b (P/Q)");
  verify->add_option("--seed", vf.seed, "Random seed");
  auto* samples = verify->add_option("--samples", vf.samples, "Random samples per case (default 5; 20 for random sequences)")
                      ->check(CLI::PositiveNumber);
  verify->add_option("--jobs", vf.jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_flag("--timing", vf.timing, "Report measured elapsed_ms instead of 0");
  add_format(verify, format_text);

  auto* list = app.add_subcommand("list", "List registered identities");
  add_format(list, format_text);

  auto* table = app.add_subcommand("table", "Print stirling, bernoulli or gaussian tables");
  table->add_option("kind", tf.kind, "stirling | bernoulli | gaussian")->required();
  table->add_option("--n", tf.n, "Rows (stirling) or top index (gaussian)");
  table->add_option("--k", tf.k, "Bottom index (gaussian)");
  table->add_option("--max", tf.max, "Largest index (bernoulli)");
  add_format(table, format_text);

  auto* comps = app.add_subcommand("compositions", "Enumerate compositions of k");
  comps->add_option("k", cf.k, "Integer to compose")->required();
  comps->add_option("--r", cf.r, "Restrict to r parts");
  add_format(comps, format_text);

  std::vector<const char*> argv{"compident"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "compident: " << e.what() << '\n';
    return kExitUsage;
  }

  vf.samples_given = samples->count() > 0;
  const Format format = format_text == "json" ? Format::json : Format::text;
  try {
    if (verify->parsed()) return run_verify(vf, format, out);
    if (list->parsed()) return run_list(format, out);
    if (table->parsed()) return run_table(tf, format, out);
    if (comps->parsed()) return run_compositions(cf, format, out);
  } catch (const BudgetExceeded& e) {
    err << "compident: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "compident: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace compident::cli
