#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace multlab::cli {

// Runs one command line (without the program name). JSON results go to
// `out`; errors are a JSON object {"error","message"} on `out` with exit 2
// for domain and usage errors and exit 1 for internal failures.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace multlab::cli
