#include "matsec/trial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "matsec/errors.hpp"

namespace matsec {

namespace {
enum Stream : uint64_t {
  kSigma = 0x5349474d41ull,  // "SIGMA"
  kPi = 0x5049ull,           // "PI"
  kTau = 0x544155ull,        // "TAU"
  kAlg = 0x414c47ull,        // "ALG"
  kWeights = 0x57454947ull,  // "WEIG"
  kTrialBase = 0x545249414cull,
};
}  // namespace

uint64_t trial_stream_seed(uint64_t master_seed, uint64_t trial_index) {
  return derive_seed(master_seed, kTrialBase + trial_index);
}

uint64_t weight_stream_seed(uint64_t trial_seed) { return derive_seed(trial_seed, kWeights); }

TrialRandomness TrialRandomness::derive(uint64_t master_seed, uint64_t trial_index, int n) {
  TrialRandomness t;
  t.trial_seed = trial_stream_seed(master_seed, trial_index);
  t.weight_to_element = CounterRng(derive_seed(t.trial_seed, kSigma)).permutation(n);
  t.arrival = CounterRng(derive_seed(t.trial_seed, kPi)).permutation(n);
  t.tie_break = CounterRng(derive_seed(t.trial_seed, kTau)).permutation(n);
  return t;
}

std::vector<int> TrialRandomness::strict_rank(const std::vector<double>& sorted_weights) const {
  int n = static_cast<int>(weight_to_element.size());
  std::vector<int> weight_index(n);  // element -> index into sorted_weights
  for (int i = 0; i < n; ++i) weight_index[weight_to_element[i]] = i;
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    double wa = sorted_weights[weight_index[a]];
    double wb = sorted_weights[weight_index[b]];
    if (wa != wb) return wa > wb;
    return tie_break[a] > tie_break[b];
  });
  std::vector<int> rank(n);
  for (int r = 0; r < n; ++r) rank[order[r]] = r;
  return rank;
}

int RngRandomSource::binomial(int n, const Prob& p) {
  double pd = p.approx();
  int hits = 0;
  for (int i = 0; i < n; ++i)
    if (rng_.bernoulli(pd)) ++hits;
  return hits;
}

bool RngRandomSource::bernoulli(const Prob& p) { return rng_.bernoulli(p.approx()); }

int RngRandomSource::uniform_index(int k) {
  if (k <= 0) throw InputError("uniform_index(k) needs k >= 1");
  return static_cast<int>(rng_.below(static_cast<uint64_t>(k)));
}

int RngRandomSource::weighted_index(const std::vector<Rat>& weights) {
  if (weights.empty()) throw InputError("weighted_index over an empty list");
  Rat total(0);
  for (const Rat& w : weights) {
    if (w < 0) throw InputError("negative weight in weighted_index");
    total += w;
  }
  if (total == 0) throw InputError("weighted_index over all-zero weights");
  // Exact cumulative walk against a 64-bit uniform scaled into [0,1).
  Rat u(rng_.next_u64());
  u /= Rat(mpz_class(1) << 64);
  Rat cum(0);
  for (size_t i = 0; i < weights.size(); ++i) {
    cum += weights[i] / total;
    if (u < cum) return static_cast<int>(i);
  }
  return static_cast<int>(weights.size()) - 1;
}

double RngRandomSource::unit_double() { return rng_.unit_double(); }

std::unique_ptr<RandomSource> RngRandomSource::fork(uint64_t tag) {
  return std::make_unique<RngRandomSource>(rng_.fork(tag));
}

TrialRecord run_trial(const Matroid& m, const std::vector<double>& sorted_weights,
                      OnlineAlgorithm& alg, uint64_t master_seed, uint64_t trial_index) {
  int n = m.size();
  if (static_cast<int>(sorted_weights.size()) != n)
    throw InputError("need exactly one weight per element");
  if (!std::is_sorted(sorted_weights.begin(), sorted_weights.end(), std::greater<>()))
    throw InputError("weights must be sorted nonincreasing");
  if (!sorted_weights.empty() && sorted_weights.back() < 0)
    throw InputError("weights must be nonnegative");

  TrialRecord rec;
  rec.randomness = TrialRandomness::derive(master_seed, trial_index, n);
  rec.trial_seed = rec.randomness.trial_seed;
  std::vector<int> rank = rec.randomness.strict_rank(sorted_weights);

  std::vector<int> weight_index(n);
  for (int i = 0; i < n; ++i) weight_index[rec.randomness.weight_to_element[i]] = i;

  RngRandomSource alg_rng{CounterRng(derive_seed(rec.trial_seed, kAlg))};
  SessionResult sr = run_session(m, rank, rec.randomness.arrival, alg, alg_rng);
  rec.accepted = sr.accepted;
  rec.comparisons = sr.comparisons;
  rec.decisions = sr.decisions;
  for (int e : rec.accepted) rec.alg_weight += sorted_weights[weight_index[e]];

  // OPT: greedy over elements heaviest-first in this trial's strict order.
  std::vector<int> by_rank(n);
  for (int e = 0; e < n; ++e) by_rank[rank[e]] = e;
  rec.opt_set = greedy_opt(m, by_rank);
  for (int e : rec.opt_set) rec.opt_weight += sorted_weights[weight_index[e]];
  return rec;
}

std::string transcript_line(const TrialRecord& rec, const std::vector<double>& sorted_weights) {
  std::ostringstream out;
  out.precision(17);
  auto list = [&out](const std::vector<int>& v) {
    out << "[";
    for (size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
    out << "]";
  };
  out << "{\"seed\":" << rec.trial_seed << ",\"sigma\":";
  list(rec.randomness.weight_to_element);
  out << ",\"pi\":";
  list(rec.randomness.arrival);
  out << ",\"tau\":";
  list(rec.randomness.tie_break);
  out << ",\"decisions\":[";
  for (size_t i = 0; i < rec.decisions.size(); ++i)
    out << (i ? "," : "") << (rec.decisions[i] ? 1 : 0);
  out << "],\"accepted\":";
  list(rec.accepted);
  out << ",\"weights\":[";
  for (size_t i = 0; i < sorted_weights.size(); ++i)
    out << (i ? "," : "") << sorted_weights[i];
  out << "],\"alg_weight\":" << rec.alg_weight << ",\"opt_weight\":" << rec.opt_weight
      << ",\"comparisons\":" << rec.comparisons << "}";
  return out.str();
}

}  // namespace matsec
