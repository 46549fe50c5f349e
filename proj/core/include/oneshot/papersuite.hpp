#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace oneshot::papersuite {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

struct SuiteResult {
  std::vector<CriterionResult> criteria;
  bool all_pass() const {
    for (const auto& c : criteria)
      if (!c.pass) return false;
    return !criteria.empty();
  }
};

// The seven headline checks. `seed` drives the random-box property suites
// only; exact-arithmetic checks ignore it.
CriterionResult run_criterion(int id, int threads = 1, std::uint64_t seed = 20240801);
SuiteResult run_all(int threads = 1, std::uint64_t seed = 20240801);

}  // namespace oneshot::papersuite
