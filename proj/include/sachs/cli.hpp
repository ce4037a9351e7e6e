#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sachs {

// Arguments exclude the program name. Returns 0 on success or passing checks,
// 1 when a check fails, 2 on a usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sachs
