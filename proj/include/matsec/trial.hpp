#pragma once

#include <optional>
#include <string>
#include <vector>

#include "matsec/online.hpp"
#include "matsec/rng.hpp"
#include "matsec/session.hpp"

namespace matsec {

// The three independent permutations of one trial, all derived from a
// 64-bit master seed and a trial index: sigma assigns the sorted weights
// to elements, pi is the arrival order, tau breaks weight ties. The
// algorithm's own draws use a fourth substream.
struct TrialRandomness {
  std::vector<int> weight_to_element;  // sigma: weight rank -> element
  std::vector<int> arrival;            // pi: position -> element
  std::vector<int> tie_break;          // tau: element -> tie value
  uint64_t trial_seed = 0;

  static TrialRandomness derive(uint64_t master_seed, uint64_t trial_index, int n);

  // Element -> strict rank (0 heaviest) under (weight, tau) lexicographic
  // comparison; equal weights are ordered by larger tau first.
  std::vector<int> strict_rank(const std::vector<double>& sorted_weights) const;
};

// MC-mode randomness for algorithms, backed by the counter generator.
class RngRandomSource final : public RandomSource {
 public:
  explicit RngRandomSource(CounterRng rng) : rng_(rng) {}

  int binomial(int n, const Prob& p) override;
  bool bernoulli(const Prob& p) override;
  int uniform_index(int k) override;
  int weighted_index(const std::vector<Rat>& weights) override;
  double unit_double() override;
  std::unique_ptr<RandomSource> fork(uint64_t tag) override;

 private:
  CounterRng rng_;
};

struct TrialRecord {
  std::vector<int> accepted;
  double alg_weight = 0;
  double opt_weight = 0;
  std::vector<int> opt_set;
  uint64_t trial_seed = 0;
  long long comparisons = 0;
  std::vector<bool> decisions;
  TrialRandomness randomness;
};

// One seeded trial: reproducible bit-for-bit from (master_seed, index).
// OPT is the greedy basis under the strict weight order of this trial's
// sigma/tau; it does not depend on the arrival order.
TrialRecord run_trial(const Matroid& m, const std::vector<double>& sorted_weights,
                      OnlineAlgorithm& alg, uint64_t master_seed, uint64_t trial_index);

// One transcript line (JSON) for auditing a trial.
std::string transcript_line(const TrialRecord& rec, const std::vector<double>& sorted_weights);

// Seed of trial t's stream bundle, and of the per-trial weight substream
// used by iid generators. Shared by run_trial and the experiment drivers.
uint64_t trial_stream_seed(uint64_t master_seed, uint64_t trial_index);
uint64_t weight_stream_seed(uint64_t trial_seed);

}  // namespace matsec
