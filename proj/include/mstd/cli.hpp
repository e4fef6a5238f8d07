#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mstd::cli {

/// Exit codes: 0 success, 1 a check found a violation, 2 usage or parse
/// error, 3 any other failure (for example an unreadable checkpoint).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mstd::cli
