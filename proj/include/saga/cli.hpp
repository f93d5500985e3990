#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "saga/errors.hpp"

namespace saga::cli {

/// Exit codes: 0 success or HOLDS, 1 a mathematical FAILS outcome, 2 input
/// errors, 3 budget exhaustion.
int exit_code(ErrorKind kind);

/// Runs one command.  `args` excludes the program name.  The JSON report goes
/// to `out`, the human summary and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace saga::cli
