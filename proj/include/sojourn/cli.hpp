#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace sojourn {

/// Exit codes: 0 success, 1 mathematical mismatch, 2 usage error.
enum ExitCode : int { kExitOk = 0, kExitMismatch = 1, kExitUsage = 2 };

enum class OutputFormat { json, csv };

/// Parsed command line for one invocation.
struct RunConfig {
  std::string subcommand;
  int theorem = 1;
  int order = 12;
  int n = 0;
  int start = 0;
  int max_order = 40;
  std::string kind = "A";
  std::string state;
  OutputFormat format = OutputFormat::json;
  std::optional<std::filesystem::path> output;
  std::optional<std::filesystem::path> golden_dir;
};

/// Runs the verification suite at the given even order and writes one
/// summary line per check. Returns kExitOk only on exact agreement everywhere.
int run_verify(int order, const std::filesystem::path& golden_dir, std::ostream& out);

/// Command-line entry point; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sojourn
