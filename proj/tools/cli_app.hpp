#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace oneshot::cli {

// Runs one CLI invocation. Exit codes: 0 success, 1 computation failure
// (failed claims / failed criteria), 2 input error, 3 budget or cap exceeded.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace oneshot::cli
