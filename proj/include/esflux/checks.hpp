#pragma once

#include <string>
#include <vector>

namespace esflux {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Property suites behind the `check` subcommand. Each runs in well under a
// second except entropy_conservation_check (a full boundary-driven Burgers
// run, a few seconds).
CheckResult matrix_invariant_check(int max_p = 5);
CheckResult two_point_flux_check(int pairs = 1000, unsigned seed = 1);
CheckResult telescoping_check();
CheckResult order_probe_check();
CheckResult linear_advection_check();
CheckResult condition_growth_check();
CheckResult entropy_conservation_check();

std::vector<CheckResult> run_all_checks();

}  // namespace esflux
