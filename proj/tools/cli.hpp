#ifndef LVOA_TOOLS_CLI_HPP
#define LVOA_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace lvoa::tools {

// Exit codes: 0 all requested checks pass, 1 a check failed, 2 usage or precondition error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lvoa::tools

#endif  // LVOA_TOOLS_CLI_HPP
