#include <algorithm>
#include <cmath>
#include <set>

#include "doctest.h"
#include "matsec/algorithms/classical.hpp"
#include "matsec/algorithms/logrank.hpp"
#include "matsec/algorithms/offline_sim.hpp"
#include "matsec/algorithms/principal_alg.hpp"
#include "matsec/algorithms/registry.hpp"
#include "matsec/algorithms/threshold.hpp"
#include "matsec/algorithms/zeroinfo.hpp"
#include "matsec/errors.hpp"
#include "matsec/exact.hpp"
#include "matsec/families.hpp"
#include "matsec/fixtures.hpp"
#include "matsec/session.hpp"
#include "matsec/trial.hpp"
#include "matsec/weights.hpp"

using namespace matsec;

namespace {

// Deterministic source for targeted tests: scripted binomial draws,
// uniform picks, and coin flips.
class FixedSource final : public RandomSource {
 public:
  explicit FixedSource(std::vector<int> script) : script_(std::move(script)) {}
  int binomial(int, const Prob&) override { return take(); }
  bool bernoulli(const Prob&) override { return take() != 0; }
  int uniform_index(int k) override { return take() % k; }
  int weighted_index(const std::vector<Rat>& w) override {
    return take() % static_cast<int>(w.size());
  }
  double unit_double() override { throw UnsupportedError("not scripted"); }
  std::unique_ptr<RandomSource> fork(uint64_t) override {
    return std::make_unique<FixedSource>(script_);
  }

 private:
  int take() {
    if (cursor_ >= script_.size()) throw InputError("script exhausted");
    return script_[cursor_++];
  }
  std::vector<int> script_;
  size_t cursor_ = 0;
};

std::vector<int> identity_perm(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i;
  return v;
}

}  // namespace

TEST_CASE("classical secretary never takes a maximum that lands in the sample") {
  // n = 4 -> sample size 1. Put the heaviest element first in arrival.
  auto u14 = std::make_shared<UniformMatroid>(4, 1);
  std::vector<int> rank = {0, 1, 2, 3};     // element 0 heaviest
  std::vector<int> arrival = {0, 1, 2, 3};  // heaviest arrives first, sampled
  ClassicalSecretary alg;
  FixedSource rng({});
  auto res = run_session(*u14, rank, arrival, alg, rng);
  CHECK(res.accepted.empty());  // nothing ever beats the sampled max

  std::vector<int> arrival2 = {1, 0, 2, 3};  // heaviest arrives second
  ClassicalSecretary alg2;
  auto res2 = run_session(*u14, rank, arrival2, alg2, rng);
  CHECK(res2.accepted == std::vector<int>{0});
}

TEST_CASE("classical secretary finds the maximum often enough") {
  // Large-n Monte Carlo: the best element is taken with frequency
  // at least 1/e - 3se.
  auto u = std::make_shared<UniformMatroid>(50, 1);
  WeightGenerator gen = WeightGenerator::parse("geometric", {{"rho", "9/10"}});
  auto w = gen.generate(50, 0);
  const long long trials = 20000;
  long long hits = 0;
  for (long long t = 0; t < trials; ++t) {
    ClassicalSecretary alg;
    TrialRecord rec = run_trial(*u, w.values, alg, 60, static_cast<uint64_t>(t));
    if (!rec.accepted.empty() && rec.alg_weight == rec.opt_weight) ++hits;
  }
  double freq = static_cast<double>(hits) / trials;
  double target = 1.0 / std::exp(1.0);
  double se = std::sqrt(freq * (1 - freq) / trials);
  CHECK(freq >= target - 3 * se);
}

TEST_CASE("offline simulation extremes") {
  auto u23 = std::make_shared<UniformMatroid>(3, 2);
  std::vector<double> w = {1.0, 0.5, 0.25};
  // p = 1: every weight is sampled, nothing is marked.
  CounterRng rng1(5);
  auto all_sampled = offline_threshold_simulation(*u23, 2, w, Prob::rational(Rat(1)), rng1);
  CHECK(all_sampled.candidate_count == 0);
  CHECK(all_sampled.accepted_weight_indices.empty());
  // p = 0: the dummies absorb exactly rank evictions, so the candidate
  // count hits the rank and the greedy keeps them all (uniform matroid).
  CounterRng rng0(6);
  auto none_sampled = offline_threshold_simulation(*u23, 2, w, Prob::rational(Rat(0)), rng0);
  CHECK(none_sampled.candidate_count == 2);
  CHECK(none_sampled.accepted_weight_indices.size() == 2);
}

TEST_CASE("threshold rule: everything sampled means empty output") {
  auto u24 = std::make_shared<UniformMatroid>(4, 2);
  DenseThreshold alg(2, Prob::rational(make_rat(1, 2)));
  FixedSource rng({4});  // binomial draw = n
  auto res = run_session(*u24, identity_perm(4), identity_perm(4), alg, rng);
  CHECK(res.accepted.empty());
}

TEST_CASE("threshold rule accepts at most rank elements and only on good evictions") {
  auto k4 = graphic(complete_graph(4));
  WeightGenerator gen = WeightGenerator::parse("geometric", {{"rho", "7/10"}});
  auto w = gen.generate(6, 0);
  for (uint64_t t = 0; t < 2000; ++t) {
    DenseThreshold alg(3, Prob::exp_of(make_rat(-1, 2)));
    TrialRecord rec = run_trial(*k4, w.values, alg, 123, t);
    CHECK(rec.accepted.size() <= 3);
    CHECK(k4->independent(rec.accepted));
  }
}

TEST_CASE("random greedy selection frequency obeys the uniformly dense bound") {
  // Small-trial version of the Monte Carlo acceptance criterion.
  auto k5 = graphic(complete_graph(5));
  const long long trials = 20000;
  int n = k5->size(), r = k5->full_rank();
  std::vector<long long> selected(n, 0);
  CounterRng rng(2024);
  for (long long t = 0; t < trials; ++t) {
    auto order = rng.fork(t).permutation(n);
    std::vector<int> basis;
    for (int j = 0; j < n; ++j)
      if (k5->independent_with(basis, order[j])) {
        basis.push_back(order[j]);
        ++selected[j];
      }
  }
  for (int j = 1; j <= r; ++j) {
    double freq = static_cast<double>(selected[j - 1]) / trials;
    double bound = 1.0 - static_cast<double>(j - 1) / r;
    double se = std::sqrt(std::max(freq * (1 - freq), 1e-12) / trials);
    CHECK(freq >= bound - 3 * se);
  }
}

TEST_CASE("principal threshold routes loops out and splits by minor") {
  Multigraph g;  // triangle + self-loop
  g.vertices = 3;
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 0);
  g.add_edge(0, 0);
  auto gm = graphic(g);
  auto plan = PrincipalPlan::build(gm);
  CHECK(plan->minor_of[3] == -1);
  CHECK(plan->minors.size() == 1);

  WeightGenerator gen = WeightGenerator::parse("equal", {});
  auto w = gen.generate(4, 0);
  for (uint64_t t = 0; t < 500; ++t) {
    PrincipalThreshold alg(plan, Prob::rational(make_rat(1, 2)));
    TrialRecord rec = run_trial(*gm, w.values, alg, 7, t);
    CHECK(std::find(rec.accepted.begin(), rec.accepted.end(), 3) == rec.accepted.end());
    CHECK(gm->independent(rec.accepted));
  }
}

TEST_CASE("principal threshold on a direct sum stays independent per minor") {
  auto ds = direct_sum({std::make_shared<UniformMatroid>(3, 1), free_matroid(2)});
  auto plan = PrincipalPlan::build(ds);
  REQUIRE(plan->minors.size() == 2);
  CHECK(plan->stream_len == std::vector<int>({3, 2}));
  CHECK(plan->minor_rank == std::vector<int>({1, 2}));

  WeightGenerator gen = WeightGenerator::parse("geometric", {});
  auto w = gen.generate(5, 0);
  for (uint64_t t = 0; t < 1000; ++t) {
    PrincipalThreshold alg(plan, Prob::exp_of(make_rat(-1, 2)));
    TrialRecord rec = run_trial(*ds, w.values, alg, 11, t);
    CHECK(ds->independent(rec.accepted));
    int from_first = 0;
    for (int e : rec.accepted)
      if (e < 3) ++from_first;
    CHECK(from_first <= 1);
  }
}

TEST_CASE("uniformly dense input gives the principal threshold a single minor") {
  auto k4 = graphic(complete_graph(4));
  auto plan = PrincipalPlan::build(k4);
  CHECK(plan->minors.size() == 1);
  CHECK(plan->stream_len[0] == 6);
  CHECK(plan->minor_rank[0] == 3);
}

TEST_CASE("cographic cover on K4 stays inside a cobase") {
  auto plan = CographicPlan::build(complete_graph(4));
  REQUIRE(plan->three_edge_connected);
  const Matroid& target = *plan->target;
  WeightGenerator gen = WeightGenerator::parse("geometric", {});
  auto w = gen.generate(6, 0);
  for (uint64_t t = 0; t < 800; ++t) {
    CographicCover alg(plan, false);
    TrialRecord rec = run_trial(target, w.values, alg, 3, t);
    CHECK(target.independent(rec.accepted));
    // Complement of the accepted set spans: accepted avoids some tree.
    GraphicMatroid primal(plan->graph);
    std::vector<int> rest;
    for (int e = 0; e < 6; ++e)
      if (std::find(rec.accepted.begin(), rec.accepted.end(), e) == rec.accepted.end())
        rest.push_back(e);
    CHECK(primal.rank(rest) == 3);
  }
}

TEST_CASE("cographic cover on a tree accepts nothing") {
  auto plan = CographicPlan::build(path_graph(3));
  const Matroid& target = *plan->target;
  WeightGenerator gen = WeightGenerator::parse("equal", {});
  auto w = gen.generate(3, 0);
  for (uint64_t t = 0; t < 50; ++t) {
    CographicCover alg(plan, false);
    TrialRecord rec = run_trial(target, w.values, alg, 5, t);
    CHECK(rec.accepted.empty());
  }
}

TEST_CASE("cographic cover on a cycle reduces to one classical secretary") {
  auto plan = CographicPlan::build(cycle_graph(5));
  REQUIRE(plan->pieces.size() == 1);
  CHECK(plan->pieces[0].classes.size() == 1);
  const Matroid& target = *plan->target;
  CHECK(parallel_classes(target).size() == 1);
  WeightGenerator gen = WeightGenerator::parse("geometric", {});
  auto w = gen.generate(5, 0);
  for (uint64_t t = 0; t < 300; ++t) {
    CographicCover alg(plan, false);
    TrialRecord rec = run_trial(target, w.values, alg, 17, t);
    CHECK(rec.accepted.size() <= 1);
  }
}

TEST_CASE("pure three-cobase rule requires 3-edge-connectivity") {
  auto plan = CographicPlan::build(theta_graph());
  CHECK_THROWS_AS(CographicCover(plan, true), InputError);
}

TEST_CASE("low-density plain variant accepts exactly the drawn set") {
  auto free3 = free_matroid(3);
  auto plan = LowDensityPlan::build(free3, false);
  WeightGenerator gen = WeightGenerator::parse("equal", {});
  auto w = gen.generate(3, 0);
  LowDensitySelect alg(plan);
  TrialRecord rec = run_trial(*free3, w.values, alg, 1, 0);
  CHECK(rec.accepted.size() == 3);  // decomposition of a free matroid is 1 * E

  auto u12 = std::make_shared<UniformMatroid>(2, 1);
  auto plan2 = LowDensityPlan::build(u12, false);
  long long took0 = 0, trials = 4000;
  for (long long t = 0; t < trials; ++t) {
    LowDensitySelect a2(plan2);
    TrialRecord rec2 = run_trial(*u12, gen.generate(2, 0).values, a2, 8, t);
    REQUIRE(rec2.accepted.size() == 1);
    if (rec2.accepted[0] == 0) ++took0;
  }
  double freq = static_cast<double>(took0) / trials;
  CHECK(std::abs(freq - 0.5) < 3 * std::sqrt(0.25 / trials));
}

TEST_CASE("simplified low-density variant composes with the class secretary") {
  Multigraph doubled;  // triangle with every edge doubled
  doubled.vertices = 3;
  for (auto [u, v] : {std::pair{0, 1}, {1, 2}, {2, 0}}) {
    doubled.add_edge(u, v);
    doubled.add_edge(u, v);
  }
  auto m = graphic(doubled);
  auto plan = LowDensityPlan::build(m, true);
  CHECK(plan->classes.size() == 3);
  CHECK(plan->gamma == make_rat(3, 2));  // density of the simplification
  WeightGenerator gen = WeightGenerator::parse("geometric", {});
  auto w = gen.generate(6, 0);
  for (uint64_t t = 0; t < 500; ++t) {
    LowDensitySelect alg(plan);
    TrialRecord rec = run_trial(*m, w.values, alg, 13, t);
    CHECK(m->independent(rec.accepted));
  }
}

TEST_CASE("arrival greedy returns a basis") {
  for (const auto& fx : {Fixture{"k4", graphic(complete_graph(4))},
                         Fixture{"u13", std::make_shared<UniformMatroid>(3, 1)}}) {
    WeightGenerator gen = WeightGenerator::parse("equal", {});
    auto w = gen.generate(fx.matroid->size(), 0);
    for (uint64_t t = 0; t < 200; ++t) {
      ArrivalGreedy alg;
      TrialRecord rec = run_trial(*fx.matroid, w.values, alg, 77, t);
      CHECK(static_cast<int>(rec.accepted.size()) == fx.matroid->full_rank());
    }
  }
}

TEST_CASE("arrival greedy takes an element arriving before the rest of its cocircuit") {
  auto k4 = graphic(complete_graph(4));
  WeightGenerator gen = WeightGenerator::parse("equal", {});
  auto w = gen.generate(6, 0);
  for (uint64_t t = 0; t < 300; ++t) {
    ArrivalGreedy alg;
    TrialRecord rec = run_trial(*k4, w.values, alg, 31, t);
    // First arrival is always accepted (it alone never contains a cut).
    CHECK(std::find(rec.accepted.begin(), rec.accepted.end(),
                    rec.randomness.arrival[0]) != rec.accepted.end());
  }
}

TEST_CASE("column-sparse output is independent every trial") {
  std::vector<std::vector<Rat>> rows = {
      {Rat(1), Rat(1), Rat(0), Rat(0), Rat(2)},
      {Rat(0), Rat(1), Rat(1), Rat(0), Rat(3)},
      {Rat(0), Rat(0), Rat(1), Rat(1), Rat(0)},
  };
  auto matrix = std::make_shared<LinearMatroid>(rows);
  auto plan = ColumnSparsePlan::build(matrix);
  WeightGenerator gen = WeightGenerator::parse("geometric", {});
  auto w = gen.generate(5, 0);
  for (uint64_t t = 0; t < 1000; ++t) {
    ColumnSparseSelect alg(plan);
    TrialRecord rec = run_trial(*matrix, w.values, alg, 19, t);
    CHECK(matrix->independent(rec.accepted));
  }
}

TEST_CASE("log-rank grid selection") {
  CHECK(floor_log3(1) == 0);
  CHECK(floor_log3(2) == 0);
  CHECK(floor_log3(3) == 1);
  CHECK(floor_log3(12) == 2);
  CHECK(floor_log3(27) == 3);

  // Known rank 12, threshold branch, sample = first 2, level l = 1:
  // the heaviest non-sampled element above a_1 is taken first.
  auto u45 = std::make_shared<UniformMatroid>(5, 4);
  LogRank alg(12);
  // script: bernoulli -> 0 (threshold branch), binomial -> 2, grid pick -> 0
  FixedSource rng({0, 2, 0});
  std::vector<int> rank = {2, 3, 0, 4, 1};  // element 2 heaviest
  std::vector<int> arrival = {4, 3, 2, 0, 1};
  auto res = run_session(*u45, rank, arrival, alg, rng);
  // Sampled: elements 4, 3 (ranks 1 and 3 -> a_1 = element 4).
  // Non-sampled heavier than a_1: element 2 (rank 0) only.
  CHECK(res.accepted == std::vector<int>{2});
}

TEST_CASE("log-rank with unknown rank stays legal and comparison-only") {
  auto k4 = graphic(complete_graph(4));
  WeightGenerator gen = WeightGenerator::parse("geometric", {});
  auto w = gen.generate(6, 0);
  for (uint64_t t = 0; t < 2000; ++t) {
    LogRank alg(std::nullopt);
    TrialRecord rec = run_trial(*k4, w.values, alg, 23, t);
    CHECK(k4->independent(rec.accepted));
  }
}

TEST_CASE("offline simulation tracks the online threshold rule") {
  auto u23 = std::make_shared<UniformMatroid>(3, 2);
  WeightGenerator gen = WeightGenerator::parse("geometric", {});
  auto w = gen.generate(3, 0);
  const long long trials = 40000;
  Prob p = Prob::exp_of(make_rat(-1, 2));

  double online_sum = 0;
  for (long long t = 0; t < trials; ++t) {
    DenseThreshold alg(2, p);
    online_sum += run_trial(*u23, w.values, alg, 41, t).alg_weight;
  }
  double offline_sum = 0;
  CounterRng rng(derive_seed(41, 0x0FF11E));
  for (long long t = 0; t < trials; ++t) {
    CounterRng trial_rng = rng.fork(t);
    auto sim = offline_threshold_simulation(*u23, 2, w.values, p, trial_rng);
    CHECK(sim.candidate_count <= 2);
    for (int idx : sim.accepted_weight_indices) offline_sum += w.values[idx];
  }
  double om = online_sum / trials, fm = offline_sum / trials;
  CHECK(std::abs(om - fm) < 0.03);  // refined 4-sigma check lives in acceptance
}

TEST_CASE("registry wires names to instances") {
  // K4: 3-edge-connected, so even the pure cobase rule instantiates.
  ParsedMatroid instance =
      parse_matroid_text("graph 4\na 0 1\nb 0 2\nc 0 3\nd 1 2\ne 1 3\nf 2 3\n");
  for (const auto& name : algorithm_names()) {
    if (name == "column-sparse") continue;  // needs a matrix instance
    INFO(name);
    AlgorithmSpec spec = make_algorithm(name, {}, instance);
    CHECK(spec.target);
    CHECK(spec.factory);
    auto alg = spec.factory();
    CHECK(alg);
  }
  ParsedMatroid mat = parse_matroid_text("matrix 2x3\n1 0 1\n0 1 1\n");
  auto cs = make_algorithm("column-sparse", {}, mat);
  CHECK(cs.factory());
  CHECK_THROWS_AS(make_algorithm("column-sparse", {}, instance), InputError);
  CHECK_THROWS_AS(make_algorithm("nope", {}, instance), InputError);
}
