#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "affschur/algebra.hpp"

namespace affschur {

struct SelftestConfig {
  int max_n = 3;
  int max_r = 3;
  int window = 2;
  MultiplyMethod method = MultiplyMethod::Oracle;
  std::uint64_t seed = 1;
  int samples = 200;
};

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Invariant suites of every module at sizes up to (max_n, max_r).
/// Deterministic for a given config.
std::vector<CheckResult> run_selftest(const SelftestConfig& config);

}  // namespace affschur
