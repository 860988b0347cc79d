#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace atomlat {

enum ExitCode : int { kExitOk = 0, kExitFail = 1, kExitUsage = 2, kExitResource = 3 };

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics and progress lines to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace atomlat
