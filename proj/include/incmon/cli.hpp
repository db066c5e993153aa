#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace incmon::cli {

// Parses and executes one command line. Results (JSON or DOT) go to `out`.
// Returns 0 on success, 1 on domain errors (a machine-readable
// {"error": code, "message": ...} object is printed to `out`), 2 on usage
// errors (message on `err`).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace incmon::cli
