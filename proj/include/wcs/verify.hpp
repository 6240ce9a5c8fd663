#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace wcs {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;  ///< worst observed value against its threshold
};

struct VerifyOptions {
  std::uint64_t seed = 20240611;
  int random_metrics = 20;
  int alpha_samples = 1000;
};

/// Numerical invariant suite over every module, in dependency order.
std::vector<CheckResult> run_invariant_suite(const VerifyOptions& opts = {});

}  // namespace wcs
