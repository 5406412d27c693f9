#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace slate::cli {

/// Runs one command given argv-style arguments (program name excluded).
/// Results go to `out`, diagnostics to `err`. Returns the process exit
/// status: 0 on success, 1 on usage or parse errors, 2 on domain errors.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace slate::cli
