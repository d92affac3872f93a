#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace z2z4 {

/* Exit codes: 0 success, 1 failed self-check, 2 parse error, 3 precondition violation, 4 guard exceeded. */
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace z2z4
