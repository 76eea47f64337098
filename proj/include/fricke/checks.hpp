#ifndef FRICKE_CHECKS_HPP
#define FRICKE_CHECKS_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace fricke {

struct CheckResult {
  std::string name;
  bool passed = false;
  double worst = 0.0;  // worst observed residual / deviation
  double bound = 0.0;  // the acceptance bound it was tested against
  std::int64_t cases = 0;
};

// Invariant suites behind the CLI `poisson-check` and `oracle-check`
// commands. count scales the number of random cases per check.
std::vector<CheckResult> run_poisson_checks(std::uint64_t seed, int count);
std::vector<CheckResult> run_oracle_checks(std::uint64_t seed, int count);

}  // namespace fricke

#endif
