#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "idealpow/ideal.hpp"

namespace idealpow::cli {

struct PropertyResult {
  std::string name;
  bool passed;
  std::string detail;
};

struct SelftestOptions {
  std::uint64_t seed = 0;
  std::uint64_t oracle_cap = kDefaultOracleCap;
};

/// Runs the randomized property suite, one line per property to `log`.
/// Theorem-level failures are reported as failed properties, not thrown.
std::vector<PropertyResult> run_property_suite(const SelftestOptions& options, std::ostream& log);

}  // namespace idealpow::cli
