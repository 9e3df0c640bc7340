#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace upinv::cli {

/// Runs one command line (args excludes the program name). Returns the
/// process exit status: 0 on success, 1 on a library error, 2 on bad usage.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace upinv::cli
