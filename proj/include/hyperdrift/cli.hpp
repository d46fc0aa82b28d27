#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hyperdrift {

enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailure = 1,
  kExitUsage = 2,
  kExitIo = 3,
};

/// Runs `hyperdrift <cmd> [flags]`; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, const char* const* argv);

}  // namespace hyperdrift
