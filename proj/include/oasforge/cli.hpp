// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace oasforge::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitDiagnostics = 2;

/// Runs `oas-forge <args...>` (without the program name). Summaries and
/// reports go to `out`, diagnostics and errors to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// argv entry point used by the executable.
int main(int argc, char** argv);

} // namespace oasforge::cli
