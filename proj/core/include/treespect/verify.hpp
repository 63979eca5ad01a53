#pragma once

#include "treespect/composition.hpp"
#include "treespect/simply_structured.hpp"
#include "treespect/tree_pattern.hpp"

namespace treespect {

struct VerifyOptions {
  int exhaustive_n = 6;   // enumerate all labeled trees up to this order
  int samples = 0;        // random trees per order beyond exhaustive_n ...
  int sample_max_n = 10;  // ... up to this order
  unsigned long long seed = 0;
};

struct SuiteResult {
  std::string name;
  long long instances = 0;
  long long checks = 0;
  long long failures = 0;
  std::vector<std::string> failure_samples;  // capped
};

struct VerifyReport {
  VerifyOptions options;
  std::vector<SuiteResult> suites;

  bool all_passed() const {
    for (const auto& s : suites) {
      if (s.failures > 0) return false;
    }
    return true;
  }
};

// Runs every property suite over the instance set: all labeled trees up to
// exhaustive_n (Pruefer enumeration) plus `samples` seeded random trees per
// order up to sample_max_n. Deterministic for fixed options.
VerifyReport run_verification(const VerifyOptions& options);

}  // namespace treespect
