#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mediakit::cli {

// Runs one command-line invocation; args excludes the program name.
// Exit codes: 0 = verdict true / success, 1 = verdict false (the witness
// report is printed as JSON), 2 = input or usage error (message on err).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mediakit::cli
