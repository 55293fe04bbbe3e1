#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace unc {

// Exit codes: 0 success, 1 negative verification or decision, 2 usage or
// format error. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace unc
