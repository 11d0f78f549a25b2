#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pbl {

// Exit codes: 0 success, 1 computational failure (or a failing check), 2 bad input.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pbl
