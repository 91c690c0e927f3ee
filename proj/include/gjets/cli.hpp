#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gjets {

// Command-line dispatch. `args` excludes the program name. Exit codes:
// 0 success, 1 verification failure, 2 usage or input error, 3 resource
// limit reached (command aborted or suite cells skipped).
int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace gjets
