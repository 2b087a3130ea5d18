#pragma once

#include <optional>
#include <ostream>
#include <string>

#include "matsec/algorithms/registry.hpp"
#include "matsec/weights.hpp"

namespace matsec {

// Ratio report: OPT/ALG estimates as published, stderr propagated in
// quadrature. Exact mode carries zero error bars plus exact value strings
// ("p/q" rationals or 50-digit decimals when the sampling rate is
// irrational). A zero ALG expectation is flagged, never encoded as a
// numeric sentinel.
struct RatioEstimate {
  double opt_mean = 0;
  double alg_mean = 0;
  double opt_stderr = 0;
  double alg_stderr = 0;
  double ratio = 0;
  double ratio_stderr = 0;
  bool ratio_infinite = false;
  long long trials = 0;
  uint64_t seed = 0;
  bool exact = false;
  std::string opt_exact;
  std::string alg_exact;
  std::string ratio_exact;
};

// Seeded Monte Carlo: trials fan out over `jobs` workers into preassigned
// slots and aggregate in index order, so results are identical for any
// worker count. iid weight generators resample per trial from the trial's
// weight substream. The optional transcript sink receives one JSON line
// per trial, in trial order.
RatioEstimate simulate_experiment(const AlgorithmSpec& alg, const WeightGenerator& gen,
                                  long long trials, uint64_t seed, int jobs = 1,
                                  std::ostream* transcript = nullptr);

// Exact expectations over all (sigma, pi) pairs and internal choice paths.
// Runs fully rational when possible, otherwise at 50 digits.
RatioEstimate exact_experiment(const AlgorithmSpec& alg, const AdversaryWeights& weights,
                               int bound = 6);

}  // namespace matsec
