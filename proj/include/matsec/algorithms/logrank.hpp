#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "matsec/algorithms/classical.hpp"
#include "matsec/online.hpp"

namespace matsec {

// Largest t with 3^t <= x; requires x >= 1.
int floor_log3(int x);

// Comparison-only algorithm for general matroids. With probability 1/2 it
// runs the classical secretary over the whole stream. Otherwise it samples
// the first Bin(n, 1/2) arrivals, computes the sample optimum
// A = {a_1 >= ... >= a_k} by greedy over the sample in descending
// comparison order, picks a level l uniformly from {1, 3, 9, ..., 3^t}
// (t = floor(log3 rank) when the rank is known, otherwise t is drawn from
// {floor(log3 k), floor(log3 k) + 1}), and then greedily accepts
// non-sampled elements heavier than a_l; when l > k the greedy runs over
// all non-sampled elements. Weights are never read numerically.
class LogRank final : public OnlineAlgorithm {
 public:
  explicit LogRank(std::optional<int> known_rank);

  void start(const StreamInfo& info, RandomSource& rng) override;
  bool on_reveal(Token t, SessionView& view) override;

 private:
  void prepare(SessionView& view);

  std::optional<int> known_rank_;
  RandomSource* rng_ = nullptr;
  bool classical_branch_ = false;
  std::unique_ptr<ClassicalSecretary> classical_;
  int sample_count_ = 0;
  bool prepared_ = false;
  std::vector<Token> sampled_;
  Token threshold_;  // a_l; invalid means "accept any comparison outcome"
};

}  // namespace matsec
