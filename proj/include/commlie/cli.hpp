#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace commlie {

/// Runs one command line (without the program name). Exit codes: 0 ok, 2 usage error,
/// 3 integrality failure or a mismatch between independent computations.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace commlie
