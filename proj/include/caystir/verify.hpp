#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "caystir/oracle.hpp"

namespace caystir {

struct VerifyOptions {
  OracleLimits limits;
  std::uint64_t seed = 20260816;
};

/// Result of one verification suite. A suite never throws: internal errors
/// count as failures and their messages land in `failures`.
struct VerifyReport {
  std::string suite;
  bool passed = true;
  long checks = 0;
  long long millis = 0;
  std::string summary;
  std::vector<std::string> failures;  // first few mismatches, detailed
};

/// All suite names, in a stable order (cheapest first, roughly).
std::vector<std::string> verify_suite_names();

/// Runs one suite by name; throws std::invalid_argument for unknown names.
VerifyReport run_verify_suite(const std::string& name,
                              const VerifyOptions& options = {});

}  // namespace caystir
