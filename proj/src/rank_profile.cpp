#include "matsec/rank_profile.hpp"

#include <algorithm>
#include <cmath>

#include "matsec/errors.hpp"
#include "matsec/rng.hpp"
#include "matsec/smallset.hpp"

namespace matsec {

std::vector<Rat> expected_rank_profile_exact(const Matroid& m, int bound) {
  RankTable table = RankTable::build(m, bound);
  int n = m.size();
  std::vector<mpz_class> layer_sum(n + 1, 0);
  uint64_t all = full_mask(n);
  for (uint64_t mask = 0; mask <= all; ++mask) {
    layer_sum[popcount(mask)] += table.rank[mask];
    if (mask == all) break;
  }
  std::vector<Rat> profile(n);
  for (int j = 1; j <= n; ++j) {
    mpz_class choose;
    mpz_bin_uiui(choose.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(j));
    Rat v(layer_sum[j], choose);
    v.canonicalize();
    profile[j - 1] = v;
  }
  return profile;
}

std::vector<McStat> expected_rank_profile_mc(const Matroid& m, long long trials,
                                             uint64_t seed) {
  if (trials < 1) throw InputError("at least one trial required");
  int n = m.size();
  std::vector<double> sum(n, 0), sumsq(n, 0);
  CounterRng rng(seed);
  for (long long t = 0; t < trials; ++t) {
    std::vector<int> assignment = rng.fork(t).permutation(n);
    std::vector<int> profile = rank_profile(m, assignment);
    for (int j = 0; j < n; ++j) {
      sum[j] += profile[j];
      sumsq[j] += static_cast<double>(profile[j]) * profile[j];
    }
  }
  std::vector<McStat> out(n);
  for (int j = 0; j < n; ++j) {
    out[j].trials = trials;
    out[j].mean = sum[j] / static_cast<double>(trials);
    double var = sumsq[j] / static_cast<double>(trials) - out[j].mean * out[j].mean;
    out[j].stderr_of_mean = trials > 1 ? std::sqrt(std::max(var, 0.0) / (trials - 1)) : 0;
  }
  return out;
}

Rat opt_expectation_by_rank_formula_exact(const Matroid& m, const std::vector<Rat>& weights,
                                          int bound) {
  int n = m.size();
  if (static_cast<int>(weights.size()) != n)
    throw InputError("need exactly one weight per element");
  if (!std::is_sorted(weights.begin(), weights.end(), std::greater<Rat>()))
    throw InputError("weights must be sorted nonincreasing");
  if (n == 0) return Rat(0);
  std::vector<Rat> profile = expected_rank_profile_exact(m, bound);
  Rat total = profile[n - 1] * weights[n - 1];
  for (int j = 1; j < n; ++j) total += profile[j - 1] * (weights[j - 1] - weights[j]);
  return total;
}

McStat opt_expectation_by_rank_formula_mc(const Matroid& m,
                                          const std::vector<double>& weights,
                                          long long trials, uint64_t seed) {
  if (trials < 1) throw InputError("at least one trial required");
  int n = m.size();
  if (static_cast<int>(weights.size()) != n)
    throw InputError("need exactly one weight per element");
  CounterRng rng(seed);
  double sum = 0, sumsq = 0;
  for (long long t = 0; t < trials; ++t) {
    std::vector<int> assignment = rng.fork(t).permutation(n);
    std::vector<int> profile = rank_profile(m, assignment);
    double v = n > 0 ? profile[n - 1] * weights[n - 1] : 0.0;
    for (int j = 1; j < n; ++j) v += profile[j - 1] * (weights[j - 1] - weights[j]);
    sum += v;
    sumsq += v * v;
  }
  McStat out;
  out.trials = trials;
  out.mean = sum / static_cast<double>(trials);
  double var = sumsq / static_cast<double>(trials) - out.mean * out.mean;
  out.stderr_of_mean = trials > 1 ? std::sqrt(std::max(var, 0.0) / (trials - 1)) : 0;
  return out;
}

}  // namespace matsec
