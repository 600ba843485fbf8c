#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nullsurf {

// Runs the command line tool on argv-style arguments, program name excluded.
// Returns the process exit code: 0 on success, 1 on usage or input errors,
// 2 when a verification ran to completion and failed.
int run_command(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace nullsurf
