#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace zxmbqc {

/// Runs the command line `args` (program name excluded). Machine output is
/// JSON on `out`, including errors; `--human` switches to aligned text.
/// Returns 0 on success, 1 on a promise violation and 2 on a usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zxmbqc
