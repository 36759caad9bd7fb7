#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tclass {

/// Command-line entry point (args exclude the program name).
/// Exit codes: 0 success/affirmative, 1 negative verdict, 2 input error,
/// 3 resource cap exceeded.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace tclass
