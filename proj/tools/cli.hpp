#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace eigendeg::cli {

/// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitViolation = 2;

/// Environment variable consulted for the default comparison tolerance.
inline constexpr const char* kTolEnvVar = "EIGENDEG_TOL";

/// Runs one invocation. `args` excludes the program name. `in` backs "-"
/// inputs, `out` backs "-" outputs, diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace eigendeg::cli
