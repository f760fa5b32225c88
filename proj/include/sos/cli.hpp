#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sos {

/// Runs one command line (without the program name). Returns 0 on success
/// and 2 on usage, parse or input errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sos
