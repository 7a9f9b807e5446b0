#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qmzv::cli {

/// Runs one command. Exit codes: 0 success / all checks passed, 1 at least
/// one failed check, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qmzv::cli
