// Copyright 2026 The qsigma Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef QSIGMA_SUITES_HPP
#define QSIGMA_SUITES_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qsigma {

struct SuiteResult {
  std::string name;
  bool pass = false;
  std::size_t cases = 0;
  std::size_t failures = 0;
  // Extra findings, one per line (e.g. counts for a secondary identity).
  std::vector<std::string> notes;
};

struct SuiteInfo {
  std::string name;
  std::string title;
  std::size_t default_cases;
};

/// The property suites in acceptance order.
const std::vector<SuiteInfo>& suite_catalog();

/// Runs a suite deterministically from the seed. cases = 0 uses the default.
/// Returns nullopt for an unknown name.
std::optional<SuiteResult> run_suite(const std::string& name, std::uint64_t seed, std::size_t cases = 0);

}  // namespace qsigma

#endif  // QSIGMA_SUITES_HPP
