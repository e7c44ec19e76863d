#pragma once

#include "opint/operad.hpp"

#include <iosfwd>
#include <string>

namespace opint {

enum ExitCode : int { ExitPass = 0, ExitFail = 1, ExitUsage = 2, ExitCapped = 3 };

/// "nat:M", "trees:N", "terminal:N" or a path to an operad JSON file. A
/// builtin without ":N" takes `bound`.
TruncatedOperad load_operad(const std::string& source, int bound = 0);

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace opint
