#pragma once

#include <iosfwd>

namespace wsg {

enum ExitCode : int { kExitOk = 0, kExitVerifyFailed = 1, kExitUsage = 2, kExitCap = 3 };

/// Entry point of wsgtool; output goes to out, diagnostics to err.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace wsg
