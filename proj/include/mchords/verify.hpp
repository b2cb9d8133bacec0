#pragma once

// Self-check suites behind `mchords verify-all`: every module's invariants on
// the built-in disks (euclidean, square, regular hexagon, lp(4)).

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace mchords {

struct SuiteResult {
  std::string name;
  bool passed = false;
  std::string detail;  // first failure, or a short summary
  double seconds = 0.0;
};

// Runs all suites; `on_result` (optional) sees each result as it finishes.
std::vector<SuiteResult> verify_all(std::uint64_t seed, std::size_t resolution,
                                    const std::function<void(const SuiteResult&)>& on_result = {});

}  // namespace mchords
