#pragma once

#include <utility>
#include <vector>

#include "matsec/online.hpp"

namespace matsec {

struct SessionResult {
  std::vector<int> accepted;  // element ids in acceptance order
  std::vector<bool> decisions;
  long long comparisons = 0;
  // Audit trail of every comparison (element pairs, queried order), kept
  // when requested.
  std::vector<std::pair<int, int>> comparison_log;
};

// Runs one stream: elements arrive in `arrival` order, comparisons resolve
// through `strict_rank` (element -> rank, 0 heaviest; ties were broken
// upstream). Every acceptance is checked against the matroid; an illegal
// acceptance aborts the trial with ContractViolation. The accepted set
// only ever grows.
SessionResult run_session(const Matroid& m, const std::vector<int>& strict_rank,
                          const std::vector<int>& arrival, OnlineAlgorithm& alg,
                          RandomSource& rng, bool log_comparisons = false);

}  // namespace matsec
