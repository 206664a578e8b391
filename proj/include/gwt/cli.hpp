#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gwt {

// Parse a full command line (without the program name), dispatch, and write
// the result document to `out`. Returns the process exit status:
//   0 success, 2 usage/parse error, 3 resource guard, 4 consistency failure.
// All numeric output is exact rational strings.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace gwt
