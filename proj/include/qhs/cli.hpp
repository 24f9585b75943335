#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qhs {

// Exit codes: 0 success, 1 usage error, 2 budget exceeded, 3 internal
// invariant violation. A "false" verdict is not an error exit.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qhs
