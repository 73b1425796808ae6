#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qjfrac::cli {

/// Exit codes: 0 success, 1 verification mismatch, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qjfrac::cli
