#pragma once

#include <map>
#include <string>
#include <vector>

#include "matsec/rational.hpp"

namespace matsec {

// Adversarial weight list, sorted nonincreasing. Exact rationals are
// carried for exact-mode experiments; iid generators produce doubles only
// and resample per trial.
struct AdversaryWeights {
  std::vector<double> values;
  std::vector<Rat> exact;
  bool has_exact = false;
};

AdversaryWeights weights_from_rats(std::vector<Rat> sorted);

// Named families:
//   geometric(rho): 1, rho, rho^2, ...
//   one-heavy(eps): 1, eps, ..., eps        (default eps = 0)
//   equal:          1, 1, ..., 1            (exercises tie-breaking)
//   uniform-iid, exponential-iid: sampled then sorted (MC only)
class WeightGenerator {
 public:
  static WeightGenerator parse(const std::string& name,
                               const std::map<std::string, std::string>& params);

  bool iid() const { return iid_; }
  const std::string& name() const { return name_; }
  AdversaryWeights generate(int n, uint64_t seed) const;

 private:
  std::string name_;
  bool iid_ = false;
  Rat ratio_;  // geometric
  Rat eps_;    // one-heavy
};

}  // namespace matsec
