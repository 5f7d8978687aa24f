#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace arx::cli {

// Runs one command line (without the program name). Reports go to `out` as
// "key: value" lines, diagnostics to `err`. Returns 0 on success, 2 when the
// input was certified to be outside the requested class, 1 on usage or I/O
// errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace arx::cli
