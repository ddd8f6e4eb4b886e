#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace maxima {

enum ExitStatus : int { kExitOk = 0, kExitUsage = 1, kExitInput = 2 };

/// Runs one command line (`args[0]` is the program name). Subcommands:
/// maxima, layers, mlcs, bench, expect. Results go to `out`, counter
/// summaries and errors to `err`.
int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace maxima
