#pragma once
#include <ostream>
#include <string>
#include <vector>

namespace modrep::cli {
// run the command line given argv-style args (no program name); returns the
// process exit code; all output goes to the given streams
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
}  // namespace modrep::cli
