#pragma once

#include <vector>

#include "matsec/matroid.hpp"
#include "matsec/prob.hpp"
#include "matsec/rng.hpp"

namespace matsec {

// Offline counterpart of the threshold rule, used to cross-check its
// output distribution. Every weight picks a uniform arrival time in
// (0, 1); the T-process runs over weights in time order with the times
// before p forming the sample, marking candidates exactly as the online
// rule would. Candidates are then assigned distinct matroid elements
// uniformly at random and filtered by the greedy procedure in time order.
struct OfflineSimResult {
  std::vector<int> accepted_weight_indices;  // indices into the sorted list
  std::vector<int> accepted_elements;
  int candidate_count = 0;
};

OfflineSimResult offline_threshold_simulation(const Matroid& m, int rank,
                                              const std::vector<double>& sorted_weights,
                                              const Prob& p, CounterRng& rng);

}  // namespace matsec
