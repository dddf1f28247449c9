#ifndef KFE_CLI_HPP
#define KFE_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace kfe::cli
{

enum exit_code : int { ok = 0, identity_failure = 1, usage_error = 2 };

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace kfe::cli

#endif
