#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hecke {

struct CommandResult {
  int exit_code = 0;
  std::string output;
};

/// Exit codes: 0 success or true verdict, 1 false verdict, 2 usage or input error.
constexpr int kExitOk = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;

/// Runs one command line (without the program name). JSON input is read from
/// --in or, when absent, from `input`. With --out the output goes to that file
/// and the returned output is empty.
CommandResult run_command(const std::vector<std::string>& args, std::istream& input);

}  // namespace hecke
