#pragma once

#include <iostream>
#include <string>
#include <vector>

namespace sylrec::cli {

/// Dispatches one sylrec invocation (args exclude the program name).
/// Exit codes: 0 success, 1 usage error, 2 data/validation error,
/// 3 no complete path.
int run_command(const std::vector<std::string>& args, std::ostream& out = std::cout,
                std::ostream& err = std::cerr);

}  // namespace sylrec::cli
