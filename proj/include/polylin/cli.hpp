#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace polylin {

// Parses and runs one command-line invocation, writing the result to out.
// Returns the process exit code: 0 on success, 1 on usage errors, 2 on
// domain or input errors (reported as an {"error", "detail"} object).
int dispatch(std::vector<std::string> args, std::ostream& out);

} // namespace polylin
