#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace assoc {

// Entry point shared by the binary and the CLI tests. Returns the process
// exit code: 0 success, 1 validation error, 2 cap exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace assoc
