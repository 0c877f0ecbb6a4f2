#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gordan {

/// Entry point behind the command-line binary, callable in-process. Exit
/// status: 0 on success, 1 on verification failure, 2 on usage error.
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

}  // namespace gordan
