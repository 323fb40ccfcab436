#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace harmonic {

/// Dispatches one CLI invocation. Exit codes: 0 success, 1 internal error,
/// 2 usage or malformed input, 3 cap exceeded, 4 verification mismatch.
int runCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

} // namespace harmonic
