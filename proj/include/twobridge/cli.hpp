// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace twobridge::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFinding = 1;  ///< failed check or scan counterexample
inline constexpr int kExitUsage = 2;    ///< usage, domain or I/O error
inline constexpr int kExitInternal = 3; ///< an internal consistency check failed

/// Runs one command. args excludes the program name. Data goes to out,
/// diagnostics and progress to err.
int execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace twobridge::cli
