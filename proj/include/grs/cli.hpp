#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace grs {

/// Entry point behind the `grs` binary. Subcommands: solve, abduce,
/// oracle, check, bench, confluence. Exit codes: 0 success, 1 proof
/// failure (F), 2 check failure, 64 usage or input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace grs
