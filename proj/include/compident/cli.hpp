#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "compident/identities.hpp"

namespace compident::cli {

/// Exit codes: all cases passed, some case failed, usage or domain error.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// Runs `compident <verify|list|table|compositions> [flags]`. `args` excludes
/// the program name. Reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Writes one report per suite (a JSON line or a text block) and returns
/// kExitFail if any suite has a failing case, kExitPass otherwise.
int emit_reports(const std::vector<SuiteReport>& suites, bool json, bool timing, std::ostream& out);

}  // namespace compident::cli
