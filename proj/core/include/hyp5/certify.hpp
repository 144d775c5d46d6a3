#pragma once
#include <functional>
#include <string>
#include <vector>

namespace hyp5 {

// One certified claim: every expected value and tolerance is pinned in the
// implementation, never injected by callers.
struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;  // computed values, or the failure message
  double seconds = 0.0;
};

struct CertifyOptions {
  bool long_census = true;  // also run the exact good-set census in criterion 4
  int threads = 0;          // 0 = hardware concurrency
  std::function<void(const std::string&)> log;  // optional progress lines
};

// Runs the fourteen acceptance criteria and returns them ordered by id.
// Shared artifacts (coset tables, graph bundles, the zeta cache) are built
// once, each charged to the criterion whose claim they support.
std::vector<CriterionResult> run_certification(const CertifyOptions& opt = {});

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace hyp5
