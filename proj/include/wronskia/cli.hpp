#pragma once

#include <string>
#include <vector>

namespace wronskia {

/// Runs the command-line front end. Exit codes: 0 pass, 1 certification
/// fail, 2 argument/format error, 3 singularity, 4 I/O failure.
int run_cli(std::vector<std::string> args);

}  // namespace wronskia
