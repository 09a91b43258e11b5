#pragma once

#include <string>
#include <vector>

namespace zws {

enum class VerifyLevel { fast, full };

struct SuiteResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  VerifyLevel level = VerifyLevel::fast;
  std::string golden_table_path;
};

/// Runs the invariant suites of every module. `full` adds the large-N residue
/// checks and the N = 176 -> 177 sign change.
std::vector<SuiteResult> run_verify(const VerifyOptions& opts);

}  // namespace zws
