#pragma once

#include "qfj/qcore.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace qfj {

/// Outcome of one invariant check.
struct CheckResult {
  std::string suite;
  std::string name;
  bool pass = false;
  /// Largest observed deviation, 0 for exact identities that hold.
  double deviation = 0;
  std::string detail;
};

/// Suite names accepted by run_suite, "all" last.
const std::vector<std::string>& suite_names();

/// Runs one invariant suite (or every suite for "all") at the given q.
/// Throws ValidationError for an unknown name.
std::vector<CheckResult> run_suite(std::string_view name, const QParam& q);

}  // namespace qfj
