#pragma once

#include <string>
#include <vector>

#include "matsec/matroid.hpp"
#include "matsec/principal.hpp"

namespace matsec {

struct VerifyCheck {
  std::string name;
  bool pass = false;
  std::string detail;  // always names the constant tested and the measured value
};

struct VerifyReport {
  std::string suite;
  std::vector<VerifyCheck> checks;
  bool pass = true;
};

// Registered suites:
//   opt-identity       exact rank-profile identity for E[w(OPT)] vs direct
//                      permutation enumeration (zero tolerance)
//   greedy-frequency   random-stream greedy selection frequencies against
//                      1 - (j-1)/r per position (Monte Carlo, 3 sigma)
//   principal-structure  critical values and nested minimizers, minor
//                      densities, exact rational arithmetic
//   partition-proxy    expected-rank domination by the associated partition
//                      matroid at 1 - 1/e, plus the induced OPT bound
//   selection-frequency  decomposition selection frequency 1/gamma per
//                      element (Monte Carlo, 3 sigma)
//   density-cocircuit  gamma(M) <= c*(M) on the small fixture battery
VerifyReport run_verify_suite(const std::string& suite, uint64_t seed);
std::vector<std::string> verify_suite_names();

// Exhaustive check that (F_{i-1}, F_i) are the unique minimal and maximal
// minimizers at every critical value, that no other lambda admits two
// distinct minimizers (grid of candidate rationals, n <= grid_bound), and
// that minors are uniformly dense with density lambda_i. Used by both the
// verify suite and the acceptance tests.
std::vector<VerifyCheck> check_principal_structure(const std::string& name, MatroidPtr m,
                                                   int grid_bound = 10);

}  // namespace matsec
