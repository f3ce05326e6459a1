#ifndef SYMF_TOOLS_CLI_HPP
#define SYMF_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace symf::cli {

enum ExitCode { kOk = 0, kFalsified = 1, kUsage = 2 };

// args excludes the program name. One JSON document (or help text) goes to out.
int run(const std::vector<std::string>& args, std::ostream& out);

}  // namespace symf::cli

#endif
