#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "matsec/errors.hpp"
#include "matsec/online.hpp"
#include "matsec/real.hpp"
#include "matsec/session.hpp"

namespace matsec {

// Scalar plug for the exact engine: Rat gives fully exact rational
// expectations (requires every probability parameter to be rational),
// Real gives 50-digit evaluation for irrational parameters like e^{-1/2}.
template <class Num>
struct NumOps;

template <>
struct NumOps<Rat> {
  static Rat from_rat(const Rat& q) { return q; }
  static Rat from_prob(const Prob& p) { return p.rat(); }  // throws NeedsRealMode
  static Rat from_long(long v) { return Rat(static_cast<int>(v)); }
};

template <>
struct NumOps<Real> {
  static Real from_rat(const Rat& q) { return to_real(q); }
  static Real from_prob(const Prob& p) { return p.real(); }
  static Real from_long(long v) { return Real(v); }
};

// Enumerates every path through an algorithm's discrete random choices.
// A run replays the recorded prefix and extends it with first outcomes;
// advance() steps the trailing choice like an odometer. Choice structure
// may depend on earlier outcomes; arities are rediscovered per run.
template <class Num>
class ChoiceTreeDriver {
 public:
  class Source final : public RandomSource {
   public:
    explicit Source(ChoiceTreeDriver* d) : d_(d) {}
    int binomial(int n, const Prob& p) override {
      return d_->draw([&] {
        std::vector<Num> pmf(n + 1);
        Num pv = NumOps<Num>::from_prob(p);
        Num q = NumOps<Num>::from_long(1) - pv;
        // pmf[k] = C(n,k) p^k (1-p)^{n-k}
        std::vector<Num> pow_p(n + 1), pow_q(n + 1);
        pow_p[0] = NumOps<Num>::from_long(1);
        pow_q[0] = NumOps<Num>::from_long(1);
        for (int i = 1; i <= n; ++i) {
          pow_p[i] = pow_p[i - 1] * pv;
          pow_q[i] = pow_q[i - 1] * q;
        }
        mpz_class binom = 1;
        for (int k = 0; k <= n; ++k) {
          if (k > 0) {
            binom *= (n - k + 1);
            binom /= k;
          }
          pmf[k] = NumOps<Num>::from_rat(Rat(binom)) * pow_p[k] * pow_q[n - k];
        }
        return pmf;
      });
    }
    bool bernoulli(const Prob& p) override {
      return d_->draw([&] {
               Num pv = NumOps<Num>::from_prob(p);
               return std::vector<Num>{NumOps<Num>::from_long(1) - pv, pv};
             }) == 1;
    }
    int uniform_index(int k) override {
      if (k <= 0) throw InputError("uniform_index(k) needs k >= 1");
      return d_->draw([&] {
        return std::vector<Num>(k, NumOps<Num>::from_rat(make_rat(1, k)));
      });
    }
    int weighted_index(const std::vector<Rat>& weights) override {
      return d_->draw([&] {
        Rat total(0);
        for (const Rat& w : weights) total += w;
        if (total == 0) throw InputError("weighted_index over all-zero weights");
        std::vector<Num> pmf;
        pmf.reserve(weights.size());
        for (const Rat& w : weights) pmf.push_back(NumOps<Num>::from_rat(w / total));
        return pmf;
      });
    }
    double unit_double() override {
      throw UnsupportedError("continuous randomness cannot be enumerated exactly");
    }
    std::unique_ptr<RandomSource> fork(uint64_t) override {
      // Joint enumeration covers forked draws; the draw order is
      // deterministic, which is all the driver needs.
      return std::make_unique<Source>(d_);
    }

   private:
    ChoiceTreeDriver* d_;
  };

  Source begin_run() {
    cursor_ = 0;
    return Source(this);
  }

  // Probability of the path taken by the finished run.
  Num path_probability() const {
    Num p = NumOps<Num>::from_long(1);
    for (const auto& c : path_) p = p * c.pmf[static_cast<size_t>(c.taken)];
    return p;
  }

  // Advance to the next path; false when the whole tree is exhausted.
  bool advance() {
    while (!path_.empty() &&
           path_.back().taken + 1 >= static_cast<int>(path_.back().pmf.size()))
      path_.pop_back();
    if (path_.empty()) return false;
    ++path_.back().taken;
    return true;
  }

 private:
  struct Choice {
    std::vector<Num> pmf;
    int taken = 0;
  };

  template <class MakePmf>
  int draw(MakePmf&& make_pmf) {
    if (cursor_ < path_.size()) return path_[cursor_++].taken;
    path_.push_back(Choice{make_pmf(), 0});
    ++cursor_;
    return 0;
  }

  std::vector<Choice> path_;
  size_t cursor_ = 0;
};

template <class Num>
struct ExactResult {
  Num alg_expectation{};
  Num opt_expectation{};
  long long session_runs = 0;
};

// Exact E[w(ALG)] and E[w(OPT)] by enumerating all n! weight assignments,
// all n! arrival orders and every internal choice path of the algorithm.
// Tie-breaking needs no extra permutation here: enumerating the strict
// ranking directly is equivalent to assigning tied weights and refining
// with an independent uniform tie-break.
template <class Num>
ExactResult<Num> exact_expectation(const Matroid& m, const std::vector<Rat>& weights,
                                   const AlgorithmFactory& factory, int max_n = 6) {
  int n = m.size();
  if (static_cast<int>(weights.size()) != n)
    throw InputError("need exactly one weight per element");
  if (!std::is_sorted(weights.begin(), weights.end(), std::greater<Rat>()))
    throw InputError("weights must be sorted nonincreasing");
  if (n > max_n)
    throw BoundError("exact expectation enumerates (n!)^2 pairs; n = " +
                     std::to_string(n) + " exceeds the bound " + std::to_string(max_n));

  std::vector<Num> w(n);
  for (int i = 0; i < n; ++i) w[i] = NumOps<Num>::from_rat(weights[i]);

  ExactResult<Num> out;
  out.alg_expectation = NumOps<Num>::from_long(0);
  out.opt_expectation = NumOps<Num>::from_long(0);

  std::vector<int> by_rank(n);  // strict rank -> element
  std::iota(by_rank.begin(), by_rank.end(), 0);
  long long perm_count = 0;
  do {
    ++perm_count;
    std::vector<int> rank(n);
    for (int r = 0; r < n; ++r) rank[by_rank[r]] = r;

    std::vector<int> opt = greedy_opt(m, by_rank);
    for (int e : opt) out.opt_expectation += w[rank[e]];

    std::vector<int> arrival(n);
    std::iota(arrival.begin(), arrival.end(), 0);
    do {
      ChoiceTreeDriver<Num> driver;
      for (;;) {
        auto src = driver.begin_run();
        auto alg = factory();
        SessionResult sr = run_session(m, rank, arrival, *alg, src);
        ++out.session_runs;
        Num prob = driver.path_probability();
        for (int e : sr.accepted) out.alg_expectation += prob * w[rank[e]];
        if (!driver.advance()) break;
      }
    } while (std::next_permutation(arrival.begin(), arrival.end()));
  } while (std::next_permutation(by_rank.begin(), by_rank.end()));

  Num fact = NumOps<Num>::from_long(perm_count);
  out.opt_expectation /= fact;
  out.alg_expectation /= fact * fact;
  return out;
}

// E_sigma[w(OPT(sigma))] alone (no arrival enumeration).
template <class Num>
Num opt_expectation_exact(const Matroid& m, const std::vector<Rat>& weights, int max_n = 8) {
  int n = m.size();
  if (static_cast<int>(weights.size()) != n)
    throw InputError("need exactly one weight per element");
  if (n > max_n)
    throw BoundError("OPT enumeration over n! permutations; n exceeds " +
                     std::to_string(max_n));
  std::vector<Num> w(n);
  for (int i = 0; i < n; ++i) w[i] = NumOps<Num>::from_rat(weights[i]);

  Num total = NumOps<Num>::from_long(0);
  std::vector<int> by_rank(n);
  std::iota(by_rank.begin(), by_rank.end(), 0);
  long long perm_count = 0;
  do {
    ++perm_count;
    std::vector<int> rank(n);
    for (int r = 0; r < n; ++r) rank[by_rank[r]] = r;
    for (int e : greedy_opt(m, by_rank)) total += w[rank[e]];
  } while (std::next_permutation(by_rank.begin(), by_rank.end()));
  return total / NumOps<Num>::from_long(perm_count);
}

}  // namespace matsec
