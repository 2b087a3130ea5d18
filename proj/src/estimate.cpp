#include "matsec/estimate.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "matsec/errors.hpp"
#include "matsec/exact.hpp"
#include "matsec/trial.hpp"

namespace matsec {

namespace {

struct MeanStderr {
  double mean = 0;
  double se = 0;
};

MeanStderr stats(const std::vector<double>& xs) {
  MeanStderr out;
  long long n = static_cast<long long>(xs.size());
  if (n == 0) return out;
  double sum = 0;
  for (double x : xs) sum += x;
  out.mean = sum / static_cast<double>(n);
  if (n > 1) {
    double ss = 0;
    for (double x : xs) ss += (x - out.mean) * (x - out.mean);
    out.se = std::sqrt(ss / static_cast<double>(n - 1) / static_cast<double>(n));
  }
  return out;
}

std::string real_str(const Real& v) {
  return v.str(50);
}

}  // namespace

RatioEstimate simulate_experiment(const AlgorithmSpec& alg, const WeightGenerator& gen,
                                  long long trials, uint64_t seed, int jobs,
                                  std::ostream* transcript) {
  if (trials < 1) throw InputError("at least one trial required");
  if (jobs < 1) jobs = 1;
  const Matroid& m = *alg.target;
  int n = m.size();

  AdversaryWeights fixed;
  if (!gen.iid()) fixed = gen.generate(n, 0);

  std::vector<double> alg_w(trials), opt_w(trials);
  std::vector<std::string> lines;
  if (transcript) lines.resize(trials);

  auto worker = [&](long long begin, long long end) {
    for (long long t = begin; t < end; ++t) {
      AdversaryWeights local;
      const AdversaryWeights* w = &fixed;
      if (gen.iid()) {
        local = gen.generate(n, weight_stream_seed(trial_stream_seed(seed, t)));
        w = &local;
      }
      auto instance = alg.factory();
      TrialRecord rec = run_trial(m, w->values, *instance, seed, static_cast<uint64_t>(t));
      alg_w[t] = rec.alg_weight;
      opt_w[t] = rec.opt_weight;
      if (transcript) lines[t] = transcript_line(rec, w->values);
    }
  };

  if (jobs == 1) {
    worker(0, trials);
  } else {
    std::vector<std::thread> pool;
    long long chunk = (trials + jobs - 1) / jobs;
    for (int j = 0; j < jobs; ++j) {
      long long begin = j * chunk;
      long long end = std::min<long long>(trials, begin + chunk);
      if (begin >= end) break;
      pool.emplace_back(worker, begin, end);
    }
    for (auto& th : pool) th.join();
  }

  if (transcript)
    for (const auto& line : lines) *transcript << line << "\n";

  RatioEstimate out;
  out.trials = trials;
  out.seed = seed;
  MeanStderr a = stats(alg_w), o = stats(opt_w);
  out.alg_mean = a.mean;
  out.alg_stderr = a.se;
  out.opt_mean = o.mean;
  out.opt_stderr = o.se;
  if (a.mean <= 0) {
    out.ratio_infinite = o.mean > 0;
    return out;
  }
  out.ratio = o.mean / a.mean;
  // First-order propagation for a quotient of (correlated, but reported
  // independently) means.
  double rel = 0;
  if (o.mean != 0) rel += (o.se / o.mean) * (o.se / o.mean);
  rel += (a.se / a.mean) * (a.se / a.mean);
  out.ratio_stderr = out.ratio * std::sqrt(rel);
  return out;
}

RatioEstimate exact_experiment(const AlgorithmSpec& alg, const AdversaryWeights& weights,
                               int bound) {
  if (!weights.has_exact)
    throw UnsupportedError("exact mode needs an exact (non-iid) weight list");
  RatioEstimate out;
  out.exact = true;
  out.trials = 0;
  const Matroid& m = *alg.target;

  if (!alg.irrational_prob) {
    try {
      auto r = exact_expectation<Rat>(m, weights.exact, alg.factory, bound);
      out.alg_mean = rat_double(r.alg_expectation);
      out.opt_mean = rat_double(r.opt_expectation);
      out.alg_exact = rat_str(r.alg_expectation);
      out.opt_exact = rat_str(r.opt_expectation);
      if (r.alg_expectation == 0) {
        out.ratio_infinite = r.opt_expectation > 0;
      } else {
        Rat ratio = r.opt_expectation / r.alg_expectation;
        out.ratio = rat_double(ratio);
        out.ratio_exact = rat_str(ratio);
      }
      return out;
    } catch (const NeedsRealMode&) {
      // fall through to the 50-digit engine
    }
  }

  auto r = exact_expectation<Real>(m, weights.exact, alg.factory, bound);
  out.alg_mean = r.alg_expectation.convert_to<double>();
  out.opt_mean = r.opt_expectation.convert_to<double>();
  out.alg_exact = real_str(r.alg_expectation);
  out.opt_exact = real_str(r.opt_expectation);
  if (r.alg_expectation == 0) {
    out.ratio_infinite = r.opt_expectation > 0;
  } else {
    Real ratio = r.opt_expectation / r.alg_expectation;
    out.ratio = ratio.convert_to<double>();
    out.ratio_exact = real_str(ratio);
  }
  return out;
}

}  // namespace matsec
