#pragma once

#include <functional>
#include <vector>

#include "matsec/online.hpp"

namespace matsec {

// Threshold rule over one stream: keep T = the r heaviest elements seen so
// far, initialized with r dummy entries lighter than everything (dummies
// leave and never return). Sample the first m ~ Bin(stream_len, p)
// arrivals. A later element is accepted iff it enters T, the member
// leaving T is a dummy or sampled, and the accepted set stays independent.
// The binomial draw happens once, before the stream starts. Reused by the
// general-matroid algorithm as one instance per principal minor, so
// comparisons and independence are injected by the caller.
class ThresholdCore {
 public:
  void start(int stream_len, int rank, const Prob& p, RandomSource& rng);

  // heavier(a, b): strict comparison of two seen elements.
  // can_extend(accepted, e): accepted + e independent in the target.
  bool process(int elem, const std::function<bool(int, int)>& heavier,
               const std::function<bool(const std::vector<int>&, int)>& can_extend);

  const std::vector<int>& accepted() const { return accepted_; }
  int sample_size() const { return sample_size_; }

 private:
  struct Member {
    int elem;
    bool sampled;
  };
  int rank_ = 0;
  int sample_size_ = 0;
  int pos_ = 0;
  std::vector<Member> top_;  // real members of T; r - |top_| dummies implied
  std::vector<int> accepted_;
};

// The threshold algorithm as a session algorithm, for a uniformly dense
// target of the given rank. Default p = e^{-1/2}.
class DenseThreshold final : public OnlineAlgorithm {
 public:
  DenseThreshold(int rank, Prob p);

  void start(const StreamInfo& info, RandomSource& rng) override;
  bool on_reveal(Token t, SessionView& view) override;

 private:
  int rank_;
  Prob p_;
  ThresholdCore core_;
  std::vector<Token> token_of_;
};

}  // namespace matsec
