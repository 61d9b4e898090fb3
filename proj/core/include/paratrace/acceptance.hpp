#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace paratrace {

struct CriterionResult {
  std::string name;
  bool pass = false;
  std::string detail;  // summary on pass, witness on failure
  double seconds = 0;
};

// The full acceptance battery, in order, deterministic given the seed.  A
// non-empty `only` restricts the run to the criterion with that key; keys are
// listed by criterion_keys().
std::vector<CriterionResult> run_acceptance(std::uint64_t seed,
                                            const std::string& only = "");
std::vector<std::string> criterion_keys();

}  // namespace paratrace
