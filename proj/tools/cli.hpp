#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tck {

inline constexpr const char* kToolkitVersion = "0.1.0";

// Runs one command line (without the program name), writes the JSON report
// to `out` and returns the exit status: 0 ok, 1 module error or failed
// checks, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out);

}  // namespace tck
