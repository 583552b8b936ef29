#pragma once

#include <optional>
#include <string>
#include <vector>

namespace splab {

/// Bounds left at 0 take the suite's default.
struct VerifyConfig {
  std::string suite;
  int n = 0;         ///< largest letter value
  int max_len = 0;   ///< longest word
  int max_size = 0;  ///< largest |shape|
  int jobs = 1;
};

struct SuiteReport {
  std::string suite;
  long tested = 0;
  long failed = 0;
  /// Input of the first failing case in enumeration order.
  std::optional<std::string> counterexample;
  std::optional<std::string> reason;
  /// Bounds actually used, e.g. `n=3 len=6`.
  std::string bounds;
  bool ok() const noexcept { return failed == 0; }
};

const std::vector<std::string>& known_suites();
bool is_known_suite(const std::string& name);

/// Throws std::invalid_argument for an unknown suite or a non-positive bound.
SuiteReport run_suite(const VerifyConfig& config);

}  // namespace splab
