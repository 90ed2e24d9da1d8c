#ifndef HIRZEBRUCH_CLI_COMMANDS_HPP
#define HIRZEBRUCH_CLI_COMMANDS_HPP

#include <ostream>
#include <string>
#include <vector>

namespace hirzebruch::cli
{

enum ExitCode : int { ok = 0, verification_failed = 1, usage_error = 2 };

// Runs `hirz <args...>` (program name excluded) and returns the exit code.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace hirzebruch::cli

#endif
