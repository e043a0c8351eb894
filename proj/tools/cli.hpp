// Copyright 2026 The qsigma Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef QSIGMA_TOOLS_CLI_HPP
#define QSIGMA_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace qsigma {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMath = 1;   // a mathematical negative, e.g. not quasifinite
inline constexpr int kExitInput = 2;  // malformed input or usage

/// Runs one command line (args excludes the program name). Results go to out,
/// diagnostics and usage text to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qsigma

#endif  // QSIGMA_TOOLS_CLI_HPP
