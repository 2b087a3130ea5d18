#pragma once

#include <vector>

#include "matsec/matroid.hpp"
#include "matsec/rational.hpp"

namespace matsec {

struct McStat {
  double mean = 0;
  double stderr_of_mean = 0;
  long long trials = 0;
};

// E[r(A_j)] for j = 1..n, where A_j is the set holding the top j weights.
// A_j is a uniform random j-subset, so the exact value averages the rank
// table over each popcount layer; n is gated by the enumeration bound.
std::vector<Rat> expected_rank_profile_exact(const Matroid& m, int bound = 20);

std::vector<McStat> expected_rank_profile_mc(const Matroid& m, long long trials,
                                             uint64_t seed);

// E[w(OPT)] through the expected-rank identity
//   E[w(OPT)] = E[r(A_n)] w_n + sum_{j<n} E[r(A_j)] (w_j - w_{j+1}).
Rat opt_expectation_by_rank_formula_exact(const Matroid& m, const std::vector<Rat>& weights,
                                          int bound = 20);

McStat opt_expectation_by_rank_formula_mc(const Matroid& m,
                                          const std::vector<double>& weights,
                                          long long trials, uint64_t seed);

}  // namespace matsec
