#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace skeletal {

// Runs one CLI invocation. `args` excludes the program name. Data goes to
// `out`, progress/diagnostics to `err`. Exit codes: 0 success, 1 a verifier
// reported an unsatisfied cover, 2 usage or input error, 3 budget exhausted.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace skeletal
