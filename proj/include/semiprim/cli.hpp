#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace semiprim {

/// Runs the command line `args` (without the program name) and returns the
/// exit code: 0 when no check failed, 1 when one did, 2 on bad input.
int run_cli(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace semiprim
