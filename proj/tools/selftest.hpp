#pragma once

#include <string>
#include <vector>

struct SuiteResult {
  std::string name;
  bool ok = true;
  std::string detail;
};

/// Exact identity suites over small degrees; `full` widens the ranges.
std::vector<SuiteResult> run_selftest(bool full);
