#include "matsec/algorithms/logrank.hpp"

#include <algorithm>

#include "matsec/errors.hpp"

namespace matsec {

int floor_log3(int x) {
  if (x < 1) throw InputError("floor_log3 needs x >= 1");
  int t = 0;
  long long power = 3;
  while (power <= x) {
    ++t;
    power *= 3;
  }
  return t;
}

LogRank::LogRank(std::optional<int> known_rank) : known_rank_(known_rank) {
  if (known_rank_ && *known_rank_ < 1) throw InputError("known rank must be >= 1");
}

void LogRank::start(const StreamInfo& info, RandomSource& rng) {
  rng_ = &rng;
  sampled_.clear();
  prepared_ = false;
  threshold_ = Token{};
  classical_branch_ = rng.bernoulli(Prob::rational(make_rat(1, 2)));
  if (classical_branch_) {
    classical_ = std::make_unique<ClassicalSecretary>();
    classical_->start(info, rng);
    return;
  }
  sample_count_ = rng.binomial(info.n, Prob::rational(make_rat(1, 2)));
}

void LogRank::prepare(SessionView& view) {
  prepared_ = true;
  // Sample optimum by greedy over the sample in descending weight order,
  // using only comparisons and independence tests on seen elements.
  std::vector<Token> order = sampled_;
  std::sort(order.begin(), order.end(),
            [&](Token a, Token b) { return view.heavier(a, b); });
  std::vector<Token> optimum;
  for (Token t : order) {
    optimum.push_back(t);
    if (!view.independent(optimum)) optimum.pop_back();
  }
  int k = static_cast<int>(optimum.size());

  int exponent;
  if (known_rank_) {
    exponent = floor_log3(*known_rank_);
  } else {
    if (k == 0) return;  // no sample optimum: greedy over everything later
    exponent = floor_log3(k) + rng_->uniform_index(2);
  }
  int level = 1;
  int pick = rng_->uniform_index(exponent + 1);
  for (int j = 0; j < pick; ++j) level *= 3;
  if (level <= k) threshold_ = optimum[level - 1];
}

bool LogRank::on_reveal(Token t, SessionView& view) {
  if (classical_branch_) return classical_->on_reveal(t, view);
  if (t.pos < sample_count_) {
    sampled_.push_back(t);
    return false;
  }
  if (!prepared_) prepare(view);
  if (threshold_.valid() && !view.heavier(t, threshold_)) return false;
  return view.can_accept(t);
}

}  // namespace matsec
