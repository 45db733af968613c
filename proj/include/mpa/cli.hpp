#pragma once

#include <string>
#include <vector>

namespace mpa {

/// Exit code contract: 0 success / positive verdict, 1 negative verdict,
/// 2 usage, parse or validation error.
struct command_outcome {
  int exit_code = 0;
  std::string output;       // stdout payload
  std::string diagnostics;  // stderr payload (errors, warnings)
};

/// Run one CLI invocation (args without the program name). Subcommands:
/// check, lts, bisim, split, regions, reo, axioms.
command_outcome run_cli(const std::vector<std::string>& args);

}  // namespace mpa
