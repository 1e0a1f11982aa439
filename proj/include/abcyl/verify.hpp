#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "abcyl/params.hpp"

namespace abcyl {

/// Deliberate defects for checking that the suites can fail.
enum class Fault { none, energy_off_by_1e_3 };

std::optional<Fault> parse_fault(const std::string& name);
std::string to_string(Fault f);

struct SuiteResult {
  std::string name;
  double tolerance = 0.0;
  double worst = 0.0;  ///< measured worst case, in the units of `tolerance`
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  static constexpr int schema_version = 1;
  Fault fault = Fault::none;
  std::vector<SuiteResult> suites;
  bool passed() const;
};

struct VerifyOptions {
  /// Parameters for the mode-level suites; nu must be positive.
  DimensionlessParams params = DimensionlessParams::make(1.0, 1.0, 0.3, 3.0);
  std::uint64_t seed = 0;
  Fault fault = Fault::none;
  int z_order = 64;
};

/// Runs every invariant suite. Deterministic for a given seed.
VerifyReport run_verification(const VerifyOptions& options);

}  // namespace abcyl
