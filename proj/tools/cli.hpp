#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace treespect::cli {

// Runs one CLI invocation: 0 success, 1 domain refusal, 2 input or parse
// error. The report goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace treespect::cli
