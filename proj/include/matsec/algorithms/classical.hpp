#pragma once

#include <vector>

#include "matsec/online.hpp"

namespace matsec {

// floor(n / e), computed from the 50-digit constant.
int classical_sample_size(int n);

// Sample the first floor(n/e) arrivals, then accept the first element
// beating everything seen. At most one acceptance; loops are ignored.
class ClassicalSecretary final : public OnlineAlgorithm {
 public:
  void start(const StreamInfo& info, RandomSource& rng) override;
  bool on_reveal(Token t, SessionView& view) override;

 private:
  int sample_ = 0;
  bool taken_ = false;
  Token best_;
};

// Classical secretary run independently inside disjoint element classes:
// per class, sample floor(size/e) of the class's own substream and accept
// the first later element beating the class best. Used by the weight-blind
// algorithms that reduce to a unit-capacity partition matroid.
class ClassSecretary {
 public:
  // classes: element ids per class; elements outside any class are ignored.
  void configure(int ground_size, const std::vector<std::vector<int>>& classes);

  bool process(Token t, SessionView& view);

  int class_of(int element) const {
    return element < static_cast<int>(class_of_.size()) ? class_of_[element] : -1;
  }

 private:
  struct ClassState {
    int sample_size = 0;
    int arrivals = 0;
    bool taken = false;
    Token best;
  };
  std::vector<int> class_of_;
  std::vector<ClassState> states_;
};

// Accepts nothing; baseline for infinite-ratio reporting.
class RejectAll final : public OnlineAlgorithm {
 public:
  void start(const StreamInfo&, RandomSource&) override {}
  bool on_reveal(Token, SessionView&) override { return false; }
};

// Accepts whenever independence allows: the weight-blind greedy whose
// ratio is governed by the smallest cocircuit sizes. Output is a basis.
class ArrivalGreedy final : public OnlineAlgorithm {
 public:
  void start(const StreamInfo&, RandomSource&) override {}
  bool on_reveal(Token t, SessionView& view) override { return view.can_accept(t); }
};

}  // namespace matsec
