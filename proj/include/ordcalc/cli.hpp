// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ordcalc::cli {

enum ExitCode : int {
  kSuccess = 0,
  kPredicateFalse = 1,  // only with --exit-status
  kParseError = 2,
  kUnsupported = 3,
  kInternal = 4,
};

struct CommandResult {
  int exit_code = kSuccess;
  std::string out;  // payload; one JSON document in --json mode
  std::string err;  // diagnostics
};

/// Runs one command line (without the program name).
CommandResult run(std::span<const std::string> args);

struct SelftestSummary {
  std::size_t facts_passed = 0;
  std::size_t facts_failed = 0;
  std::size_t property_checks = 0;
  std::size_t property_violations = 0;
  std::vector<std::string> failures;
  bool ok() const { return facts_failed == 0 && property_violations == 0; }
};

/// Hand-fact table plus sampled algebraic laws over a random corpus.
SelftestSummary selftest(std::uint64_t seed, std::size_t samples);

}  // namespace ordcalc::cli
