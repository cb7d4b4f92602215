#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace coartin {

/// Runs one CLI invocation; args excludes the program name.
/// Returns 0 on success, 2 on invalid input, 1 on an internal error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Largest m accepted by the CLI: $COARTIN_MAX_M, default 20.
int maxM();

}  // namespace coartin
