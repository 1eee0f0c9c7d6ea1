#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace regcoal {

/// Runs the regcoal command line on `args` (program name excluded).
/// Returns 0 when every check passes, 1 when a check fails, 2 on usage or input errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace regcoal
