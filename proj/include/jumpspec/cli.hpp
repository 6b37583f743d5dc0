#pragma once

#include <string>
#include <vector>

namespace jumpspec {

/// Entry point behind the `jumpspec` binary. args excludes the program name.
/// Returns the process exit status; never throws.
int run_cli(const std::vector<std::string>& args);

}  // namespace jumpspec
