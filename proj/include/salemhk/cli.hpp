#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace salemhk::cli {

// Exit codes: 0 computed (whatever the verdict), 1 usage error, 2
// computation error. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace salemhk::cli
