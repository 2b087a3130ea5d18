#pragma once

#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "matsec/matroid.hpp"
#include "matsec/prob.hpp"

namespace matsec {

// Handle to a revealed element. The element id is public knowledge (the
// matroid is known); the element's weight is not reachable through any
// session interface, only comparisons are.
struct Token {
  int element = -1;
  int pos = -1;  // arrival index, 0-based

  bool valid() const { return element >= 0; }
};

// Discrete randomness an online algorithm may consume. Backed by a seeded
// counter generator during Monte Carlo trials and by an exhaustive
// choice-tree enumerator in exact mode (where unit_double is unsupported,
// since continuous draws cannot be enumerated).
class RandomSource {
 public:
  virtual ~RandomSource() = default;
  virtual int binomial(int n, const Prob& p) = 0;
  virtual bool bernoulli(const Prob& p) = 0;
  virtual int uniform_index(int k) = 0;  // uniform over {0..k-1}
  virtual int weighted_index(const std::vector<Rat>& weights) = 0;
  virtual double unit_double() = 0;
  // Draws from the fork are independent of the parent's in MC mode and
  // jointly enumerated in exact mode.
  virtual std::unique_ptr<RandomSource> fork(uint64_t tag) = 0;
};

class Session;

// What an algorithm can see mid-stream: arrival counts, comparisons among
// seen elements (strict total order, ties already broken), and
// independence tests restricted to seen elements. There is deliberately
// no accessor for numeric weights.
class SessionView {
 public:
  explicit SessionView(Session* s) : s_(s) {}

  int n() const;
  int revealed_count() const;
  std::span<const Token> revealed() const;
  std::span<const Token> accepted() const;

  // Strict: exactly one of heavier(a,b), heavier(b,a) holds for a != b.
  bool heavier(Token a, Token b) const;

  // Independence in the session's matroid; all tokens must be revealed.
  bool independent(std::span<const Token> tokens) const;

  // independent(accepted + t).
  bool can_accept(Token t) const;

 private:
  Session* s_;
};

struct StreamInfo {
  int n = 0;
  const Matroid* matroid = nullptr;  // structure is public, weights are not
  int rank = -1;                     // -1 when withheld from the algorithm
};

// Contract for online algorithms: observe one element at a time, return
// accept/reject; decisions are irrevocable and there is no API that
// removes an accepted element. Instances are single-trial state machines.
class OnlineAlgorithm {
 public:
  virtual ~OnlineAlgorithm() = default;
  virtual void start(const StreamInfo& info, RandomSource& rng) = 0;
  virtual bool on_reveal(Token t, SessionView& view) = 0;
  virtual void finish() {}
};

using AlgorithmFactory = std::function<std::unique_ptr<OnlineAlgorithm>()>;

}  // namespace matsec
