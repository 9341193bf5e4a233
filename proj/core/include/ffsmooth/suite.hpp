// The acceptance checks, shared by `ffsmooth paper-suite` and the
// acceptance test binary.
#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ffsmooth/arith.hpp"

namespace ffsmooth {

enum class SuiteProfile {
  /// Reduced Ω₁ sweep and exploration depth; everything else in full.
  Quick,
  Full,
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  /// The profile ran a reduced version of this check.
  bool reduced = false;
  std::vector<std::string> details;
  double elapsed_ms = 0;
};

struct SuiteOptions {
  SuiteProfile profile = SuiteProfile::Full;
  unsigned threads = 1;
  std::optional<std::filesystem::path> cache_dir;
  /// Empty: every criterion.
  std::set<int> only;
  /// Counting function under test in the counting-identity check; replaced
  /// by a tampered version for the negative control.
  std::function<BigInt(u64, unsigned)> count_irreducible;
  std::function<void(const std::string&)> log;
};

inline constexpr int kCriterionCount = 11;

std::string criterion_name(int id);

/// count_irreducible with an off-by-one for k >= 2.
BigInt count_irreducible_tampered(u64 q, unsigned k);

CriterionResult run_criterion(int id, const SuiteOptions& options);
std::vector<CriterionResult> run_suite(const SuiteOptions& options);

}  // namespace ffsmooth
