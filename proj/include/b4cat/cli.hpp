#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace b4cat {

/// Runs the command-line interface.  Exit codes: 0 = pass, 1 = a
/// verification check failed (or `eq` words differ), 2 = usage, parse or
/// resource-limit error.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace b4cat
