#pragma once

#include <cstdint>

namespace germain::cli {

// Process exit codes. Code 1 is reserved for mathematically meaningful
// findings (a failed check or a theorem1 scan hit), never for I/O trouble.
inline constexpr int kOk = 0;
inline constexpr int kViolation = 1;
inline constexpr int kUsage = 2;
inline constexpr int kRuntime = 3;

// Exit code for a verify/check run: any failed report is a violation.
int exit_for_checks(uint64_t failed);

// Wieferich and near-Wieferich findings are the scan's purpose (exit 0); a
// theorem1 finding would falsify the theorem and demands attention (exit 1).
int exit_for_scan(bool theorem1_kind, uint64_t findings);

// Dispatches subcommands; JSON lines on stdout, human summary on stderr.
int run(int argc, const char* const* argv);

}  // namespace germain::cli
