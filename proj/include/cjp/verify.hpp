#pragma once

// The acceptance checks, runnable from the CLI and from the test binaries.

#include <functional>
#include <string>
#include <vector>

namespace cjp::verify {

enum class Level { Fast, Full };

struct CheckResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

struct VerifyOptions {
  Level level = Level::Fast;
  /// Forwarded to the state sum; nonzero values must make the suite fail.
  int twist_half_offset = 0;
  int threads = 1;
  /// Called after each check finishes.
  std::function<void(const CheckResult&)> on_result;
};

constexpr int kCheckCount = 9;

std::string check_name(int id);
/// Runs one check (1..kCheckCount). Exceptions inside a check count as a failure.
CheckResult run_check(int id, const VerifyOptions& opts);
std::vector<CheckResult> run_checks(const VerifyOptions& opts);

}  // namespace cjp::verify
