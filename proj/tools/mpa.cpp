#include <cstdio>
#include <string>
#include <vector>

#include "mpa/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  mpa::command_outcome outcome = mpa::run_cli(args);
  if (!outcome.output.empty()) {
    std::fputs(outcome.output.c_str(), stdout);
  }
  if (!outcome.diagnostics.empty()) {
    std::fputs(outcome.diagnostics.c_str(), stderr);
  }
  return outcome.exit_code;
}
