#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lerchz::app {

// Exit codes of the lerchz tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,     // malformed arguments
  kExitPole = 2,      // evaluation at a pole
  kExitIdentity = 3,  // an identity check failed beyond its bounds
  kExitEnvelope = 4,  // envelope failures above the allowed rate
  kExitRuntime = 5,   // capacity, convergence or numeric failure
};

// Runs the tool on args (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lerchz::app
