#include <cstdio>
#include <string>
#include <vector>

#include "signcox/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  signcox::CommandOutcome outcome = signcox::run(args);
  std::fputs(outcome.out.c_str(), stdout);
  std::fputs(outcome.err.c_str(), stderr);
  return outcome.exit_code;
}
