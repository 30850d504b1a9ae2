#pragma once

// The ten acceptance criteria: published Dirichlet coefficients, enumeration
// against counting, point groups, closed form against brute force, the
// equality criterion, spectra and randomized property checks.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "csl4/oracle.hpp"

namespace csl4 {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

inline constexpr int kCriterionCount = 10;

CriterionResult run_criterion(int id, const Budget& budget = {});

/// Runs criteria in order; `on_result` (if set) sees each result as soon as
/// it is available.
std::vector<CriterionResult> run_acceptance(const Budget& budget = {},
                                            const std::function<void(const CriterionResult&)>& on_result = {});

/// Randomized property checks with a fixed seed; returns the failures.
std::vector<std::string> property_failures(std::uint64_t seed, int rounds);

}  // namespace csl4
