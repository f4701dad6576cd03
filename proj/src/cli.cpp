#include "modrep/cli.hpp"

namespace modrep::cli {
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  (void)args;
  (void)out;
  err << "not yet implemented\n";
  return 1;
}
}  // namespace modrep::cli
