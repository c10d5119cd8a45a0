#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace iwahori {

/// Exit codes of the command line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailed = 1,
  kExitParseError = 2,
  kExitSingular = 3,
  kExitGuard = 4,
};

struct RunConfig {
  int n = 2;
  long p = 2;
  int eps_exp = 0;
  std::uint64_t seed = 1;
  int samples = 100;
  int range = 2;
  std::string format = "json";
  bool include_zeros = false;
  std::string scale = "1";
  bool mod_center = false;
};

/// Runs the tool with args excluding the program name. Reports go to out,
/// diagnostics to err; returns an ExitCode.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace iwahori
