#pragma once

// Randomised exact verification suites. Every case draws its inputs from its
// own generator, seeded from (seed, check, context, case index), so a failing
// case can be replayed in isolation.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "symcoh/darboux.hpp"

namespace symcoh {

enum class Suite { Brylinski, Bracket, Cocycle, All };

/// brylinski, bracket, cocycle, all; throws UnknownNameError otherwise.
Suite suite_from_name(std::string_view name);

struct VerifyOptions {
  std::uint64_t seed = kDefaultSeed;
  int cases = 200;
  /// Darboux chart / torus dimensions 2n; each must be 2 or 4.
  std::vector<int> dims = {2, 4};
};

struct CheckResult {
  std::string name;
  /// "2n=4", or a catalog model name for checks on CE models.
  std::string context;
  int cases = 0;
  int failures = 0;
  /// Inputs and defect of the first failing case.
  std::string first_failure;
  std::uint64_t first_failure_seed = 0;
};

struct SuiteResult {
  std::vector<CheckResult> checks;
  bool ok() const;
};

SuiteResult run_suite(Suite suite, const VerifyOptions& options);

/// Seed of one case.
std::uint64_t case_seed(std::uint64_t seed, std::string_view check, std::string_view context, int index);

/// SYMCOH_SEED if set (decimal or 0x-prefixed hex), else fallback. Throws
/// ParseError on malformed values.
std::uint64_t seed_from_env(std::uint64_t fallback = kDefaultSeed);

/// One line per check; failing checks are followed by a replay line.
std::string format_result(const SuiteResult& result);
std::string to_json(const SuiteResult& result);

}  // namespace symcoh
