#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cfstat::cli {

inline constexpr const char* kToolName = "cf-statlab";

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kUsage = 2,
  kEmptyEnsemble = 3,
  kOverflow = 4,
};

/// Runs one command line (args excludes the program name). Regular output
/// goes to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Lowercase hex SHA-256 of `data`.
std::string sha256_hex(const std::string& data);

}  // namespace cfstat::cli
