#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace v2xsec {

/// Runs one command line (without the program name). Returns the process
/// exit status; diagnostics go to `err`, informational output to `out`.
int execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace v2xsec
