#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace retract::cli {

// Exit codes: 0 = YES / success, 1 = NO, 2 = error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace retract::cli
