#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mdinf::cli {

// Parses argv (program name stripped) and runs the selected subcommand.
// Exit codes: 0 success, 2 validation, 3 numeric range, 4 resource limit,
// 5 cross-method inconsistency detected.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mdinf::cli
