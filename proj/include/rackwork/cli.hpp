#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rackwork::cli {

inline constexpr int exit_pass = 0;
inline constexpr int exit_fail = 1;
inline constexpr int exit_invalid = 2;

/// Runs the command line (args excludes the program name). Reports go to
/// out, diagnostics to err. Returns 0 when every check passed, 1 when a
/// mathematical check failed, 2 when the input was unusable.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rackwork::cli
