#pragma once

#include <memory>
#include <vector>

#include "matsec/algorithms/threshold.hpp"
#include "matsec/density.hpp"
#include "matsec/minor.hpp"
#include "matsec/online.hpp"

namespace matsec {

// Static routing structure for the general-matroid algorithm: loops are
// dropped, the rest of the ground set splits into the principal minors of
// the loopless part. Built once per matroid and shared by all trials.
struct PrincipalPlan {
  MatroidPtr matroid;
  std::vector<std::shared_ptr<const MinorView>> minors;
  std::vector<int> minor_of;  // element -> minor index, -1 for loops
  std::vector<int> local_id;  // element -> local id inside its minor
  std::vector<int> stream_len;
  std::vector<int> minor_rank;

  static std::shared_ptr<const PrincipalPlan> build(MatroidPtr m,
                                                    const EnumerationOptions& opts = {});
};

// Runs one threshold instance per principal minor, each with its own
// binomial sample over its own substream and its own randomness fork, and
// returns the union of their outputs. Independence inside a sub-instance
// is tested in the contracted minor, so the union is independent in the
// full matroid.
class PrincipalThreshold final : public OnlineAlgorithm {
 public:
  PrincipalThreshold(std::shared_ptr<const PrincipalPlan> plan, Prob p);

  void start(const StreamInfo& info, RandomSource& rng) override;
  bool on_reveal(Token t, SessionView& view) override;

 private:
  std::shared_ptr<const PrincipalPlan> plan_;
  Prob p_;
  std::vector<ThresholdCore> cores_;
  std::vector<std::unique_ptr<RandomSource>> forks_;
  std::vector<Token> token_of_;
};

}  // namespace matsec
