#pragma once

#include <ostream>

namespace hm::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2, kCapExceeded = 3 };

/// Entry point of the hm tool. Writes reports to `out` and diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hm::cli
