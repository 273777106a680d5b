#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace edvlab {

inline constexpr std::uint64_t kDefaultSeed = 20240607;

struct CheckResult {
  std::string suite;
  std::string invariant;
  bool passed = true;
  std::int64_t cases = 0;
  /// Tree text of the first failing case.
  std::optional<std::string> counterexample;
  std::string detail;
};

struct VerifyOptions {
  int max_n = 9;
  std::uint64_t seed = kDefaultSeed;
};

/// Suites: counts, edv, order, exchange, families, indices, closure, all.
/// Each suite caps max_n at what it can finish in seconds.
std::vector<CheckResult> run_suite(std::string_view suite, const VerifyOptions& options);

const std::vector<std::string>& suite_names();

/// One JSON object per line.
std::string render_results(const std::vector<CheckResult>& results);

} // namespace edvlab
