#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bideal {

// Full command-line surface. `args` excludes the program name. Returns the
// process exit code: 0 success, 1 parse/usage error, 2 inconclusive at the
// exploration caps (always for a missing hard result, and for any soft
// inconclusive flag under --strict), 3 internal inconsistency.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bideal
