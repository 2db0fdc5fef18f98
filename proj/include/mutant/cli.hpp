#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mutant::cli {

/// Entry point of the command-line driver. Returns the process exit code:
/// 0 on success, 1 on a domain error (such as a non-realizable diagram),
/// 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace mutant::cli
