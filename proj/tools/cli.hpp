#pragma once

#include <ostream>

namespace matchfield::cli {

enum ExitCode : int { Ok = 0, VerificationFailed = 1, UsageError = 2, ResourceAbort = 3 };

/// Parses argv, runs one subcommand, writes its output to `out` (or --out FILE) and
/// diagnostics to `err`. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace matchfield::cli
