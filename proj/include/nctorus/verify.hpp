#pragma once

#include <map>
#include <string>
#include <vector>

#include "nctorus/io.hpp"

namespace nctorus {

struct SuiteResult {
  std::string name;
  double tolerance = 0.0;
  double observed = 0.0;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<SuiteResult> suites;
  bool all_passed() const;
  std::vector<SuiteResult> failures() const;
  Json to_json() const;
};

/// Default tolerance per suite name.
const std::map<std::string, double>& default_tolerances();

/// Effective tolerance: config override if present, else default, times tol_scale.
double suite_tolerance(const ExperimentConfig& config, const std::string& name, double tol_scale);

/// Runs every invariant suite on the configured diffeo and truncation.
VerifyReport run_invariant_suite(const ExperimentConfig& config, double tol_scale = 1.0);

}  // namespace nctorus
