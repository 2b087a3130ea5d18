#include "matsec/verify.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "matsec/algorithms/zeroinfo.hpp"
#include "matsec/errors.hpp"
#include "matsec/exact.hpp"
#include "matsec/families.hpp"
#include "matsec/fixtures.hpp"
#include "matsec/rank_profile.hpp"
#include "matsec/rng.hpp"
#include "matsec/smallset.hpp"
#include "matsec/trial.hpp"
#include "matsec/weights.hpp"

namespace matsec {

namespace {

std::vector<std::pair<std::string, std::vector<Rat>>> standard_weight_lists(int n) {
  std::vector<std::pair<std::string, std::vector<Rat>>> out;
  WeightGenerator one = WeightGenerator::parse("one-heavy", {});
  WeightGenerator geo = WeightGenerator::parse("geometric", {{"rho", "1/2"}});
  WeightGenerator eq = WeightGenerator::parse("equal", {});
  out.emplace_back("one-heavy", one.generate(n, 0).exact);
  out.emplace_back("geometric(1/2)", geo.generate(n, 0).exact);
  out.emplace_back("equal", eq.generate(n, 0).exact);
  return out;
}

VerifyCheck check(const std::string& name, bool pass, const std::string& detail) {
  return VerifyCheck{name, pass, detail};
}

VerifyReport suite_opt_identity() {
  VerifyReport rep;
  rep.suite = "opt-identity";
  std::vector<Fixture> fixtures = exact_fixtures();
  fixtures.push_back({"u37", std::make_shared<UniformMatroid>(7, 3)});
  fixtures.push_back({"theta", graphic(theta_graph())});
  for (const auto& fx : fixtures) {
    if (fx.matroid->size() > 7) continue;
    for (const auto& [wname, weights] : standard_weight_lists(fx.matroid->size())) {
      Rat by_formula = opt_expectation_by_rank_formula_exact(*fx.matroid, weights);
      Rat direct = opt_expectation_exact<Rat>(*fx.matroid, weights);
      bool ok = by_formula == direct;
      std::ostringstream d;
      d << "rank-profile identity (tolerance 0): formula " << rat_str(by_formula)
        << " vs direct " << rat_str(direct);
      rep.checks.push_back(check(fx.name + "/" + wname, ok, d.str()));
    }
  }
  for (const auto& c : rep.checks) rep.pass = rep.pass && c.pass;
  return rep;
}

VerifyReport suite_greedy_frequency(uint64_t seed) {
  VerifyReport rep;
  rep.suite = "greedy-frequency";
  const long long trials = 100000;
  std::vector<Fixture> fixtures = {{"k5", graphic(complete_graph(5))},
                                   {"u48", std::make_shared<UniformMatroid>(8, 4)}};
  for (const auto& fx : fixtures) {
    const Matroid& m = *fx.matroid;
    int n = m.size();
    int r = m.full_rank();
    std::vector<long long> selected(n, 0);
    CounterRng rng(derive_seed(seed, 0x4752454459ull));
    for (long long t = 0; t < trials; ++t) {
      std::vector<int> order = rng.fork(t).permutation(n);
      std::vector<int> basis;
      for (int j = 0; j < n; ++j) {
        if (m.independent_with(basis, order[j])) {
          basis.push_back(order[j]);
          ++selected[j];
        }
      }
    }
    for (int j = 1; j <= r; ++j) {
      double freq = static_cast<double>(selected[j - 1]) / static_cast<double>(trials);
      double bound = 1.0 - static_cast<double>(j - 1) / r;
      double se = std::sqrt(std::max(freq * (1 - freq), 1e-12) / trials);
      bool ok = freq >= bound - 3 * se;
      std::ostringstream d;
      d << "bound 1-(j-1)/r = " << bound << ", measured " << freq << " (3se = " << 3 * se
        << ")";
      rep.checks.push_back(check(fx.name + "/position-" + std::to_string(j), ok, d.str()));
    }
  }
  for (const auto& c : rep.checks) rep.pass = rep.pass && c.pass;
  return rep;
}

VerifyReport suite_principal_structure() {
  VerifyReport rep;
  rep.suite = "principal-structure";
  for (const auto& fx : principal_fixtures()) {
    auto checks = check_principal_structure(fx.name, fx.matroid);
    rep.checks.insert(rep.checks.end(), checks.begin(), checks.end());
  }
  for (const auto& c : rep.checks) rep.pass = rep.pass && c.pass;
  return rep;
}

VerifyReport suite_partition_proxy() {
  VerifyReport rep;
  rep.suite = "partition-proxy";
  const Real& c = consts::one_minus_inv_e();
  for (const auto& fx : principal_fixtures()) {
    PrincipalSequence seq = principal_sequence(fx.matroid);
    std::vector<std::vector<int>> parts = seq.step_ground_sets;
    std::vector<int> caps = seq.step_ranks;
    PartitionMatroid proxy(parts, caps);

    std::vector<Rat> pm = expected_rank_profile_exact(*fx.matroid);
    std::vector<Rat> pp = expected_rank_profile_exact(proxy);
    Real worst = 1;
    bool ok = true;
    for (size_t j = 0; j < pm.size(); ++j) {
      Real margin = to_real(pp[j]) - c * to_real(pm[j]);
      if (margin < 0) ok = false;
      worst = std::min(worst, margin);
    }
    std::ostringstream d;
    d << "constant 1-1/e = " << c.str(12) << ", min expected-rank margin " << worst.str(6);
    rep.checks.push_back(check(fx.name + "/expected-ranks", ok, d.str()));

    for (const auto& [wname, weights] : standard_weight_lists(fx.matroid->size())) {
      Rat opt_m = opt_expectation_by_rank_formula_exact(*fx.matroid, weights);
      Rat opt_p = opt_expectation_by_rank_formula_exact(proxy, weights);
      Real margin = to_real(opt_p) - c * to_real(opt_m);
      std::ostringstream dd;
      dd << "constant 1-1/e = " << c.str(12) << ": E[w(OPT_P)] = " << rat_str(opt_p)
         << " vs E[w(OPT_M)] = " << rat_str(opt_m) << ", margin " << margin.str(6);
      rep.checks.push_back(check(fx.name + "/opt/" + wname, margin >= 0, dd.str()));
    }
  }
  for (const auto& c2 : rep.checks) rep.pass = rep.pass && c2.pass;
  return rep;
}

VerifyReport suite_selection_frequency(uint64_t seed) {
  VerifyReport rep;
  rep.suite = "selection-frequency";
  const long long trials = 100000;
  for (const auto& fx : decomposition_fixtures()) {
    auto plan = LowDensityPlan::build(fx.matroid, false);
    int n = fx.matroid->size();
    std::vector<long long> hits(n, 0);
    std::vector<double> w(n, 1.0);
    for (long long t = 0; t < trials; ++t) {
      LowDensitySelect alg(plan);
      TrialRecord rec = run_trial(*fx.matroid, w, alg, derive_seed(seed, 0x46524551ull),
                                  static_cast<uint64_t>(t));
      for (int e : rec.accepted) ++hits[e];
    }
    double target = 1.0 / rat_double(plan->gamma);
    bool ok = true;
    double worst_dev = 0;
    for (int e = 0; e < n; ++e) {
      double freq = static_cast<double>(hits[e]) / trials;
      double se = std::sqrt(std::max(freq * (1 - freq), 1e-12) / trials);
      if (std::abs(freq - target) > 3 * se) ok = false;
      worst_dev = std::max(worst_dev, std::abs(freq - target));
    }
    std::ostringstream d;
    d << "constant 1/gamma = 1/(" << rat_str(plan->gamma) << ") = " << target
      << ", worst per-element deviation " << worst_dev << " over " << trials << " trials";
    rep.checks.push_back(check(fx.name, ok, d.str()));
  }
  for (const auto& c : rep.checks) rep.pass = rep.pass && c.pass;
  return rep;
}

VerifyReport suite_density_cocircuit() {
  VerifyReport rep;
  rep.suite = "density-cocircuit";
  for (const auto& fx : cocircuit_fixtures()) {
    if (fx.matroid->size() > 10) continue;
    Density d = density(*fx.matroid);
    int cs = c_star(*fx.matroid);
    bool ok = d.value <= cs;
    std::ostringstream msg;
    msg << "gamma(M) = " << rat_str(d.value) << " vs c*(M) = " << cs;
    rep.checks.push_back(check(fx.name, ok, msg.str()));
  }
  for (const auto& c : rep.checks) rep.pass = rep.pass && c.pass;
  return rep;
}

}  // namespace

std::vector<VerifyCheck> check_principal_structure(const std::string& name, MatroidPtr m,
                                                   int grid_bound) {
  std::vector<VerifyCheck> out;
  PrincipalSequence seq = principal_sequence(m);
  int n = m->size();

  bool decreasing = true;
  for (int i = 1; i < seq.steps(); ++i)
    decreasing = decreasing && seq.critical_values[i] < seq.critical_values[i - 1];
  bool last_ok = seq.critical_values.back() >= 1;
  {
    std::ostringstream d;
    d << "lambda = ";
    for (int i = 0; i < seq.steps(); ++i)
      d << (i ? " > " : "") << rat_str(seq.critical_values[i]);
    d << ", lambda_k >= 1";
    out.push_back(check(name + "/critical-values", decreasing && last_ok, d.str()));
  }

  // F_{i-1} and F_i are the unique minimal/maximal minimizers at lambda_i.
  for (int i = 0; i < seq.steps(); ++i) {
    SurplusMinimizers sm = rank_surplus_minimizers(*m, seq.critical_values[i]);
    std::vector<int> prev = i == 0 ? std::vector<int>{} : seq.nested_sets[i - 1];
    bool ok = sm.minimal == prev && sm.maximal == seq.nested_sets[i];
    std::ostringstream d;
    d << "lambda_" << (i + 1) << " = " << rat_str(seq.critical_values[i]) << ": "
      << sm.minimizer_count << " minimizers, extremes match F_" << i << ", F_" << (i + 1);
    out.push_back(check(name + "/minimizers-" + std::to_string(i + 1), ok, d.str()));
  }

  // Each principal minor is uniformly dense with density exactly lambda_i.
  bool minors_ok = true;
  for (int i = 0; i < seq.steps(); ++i) {
    Density d = density(*seq.minors[i]);
    minors_ok = minors_ok && is_uniformly_dense(*seq.minors[i]) &&
                d.value == seq.critical_values[i];
  }
  out.push_back(check(name + "/minor-densities", minors_ok,
                      "every principal minor uniformly dense with density lambda_i"));

  // Size and rank bookkeeping.
  {
    int total = 0, rank_total = 0;
    for (int i = 0; i < seq.steps(); ++i) {
      total += static_cast<int>(seq.step_ground_sets[i].size());
      rank_total += seq.step_ranks[i];
    }
    bool ok = total == n && rank_total == m->full_rank();
    out.push_back(check(name + "/partition-bookkeeping", ok,
                        "sum |E_i| = n and sum r_i = r(E)"));
  }

  // No lambda outside the critical list admits two distinct minimizers.
  if (n <= grid_bound) {
    RankTable table = RankTable::build(*m, grid_bound);
    std::set<Rat> candidates;
    int r = m->full_rank();
    for (int s1 = 0; s1 <= n; ++s1)
      for (int s2 = 0; s2 < s1; ++s2)
        for (int r1 = 0; r1 <= r; ++r1)
          for (int r2 = 0; r2 < r1; ++r2) candidates.insert(make_rat(s1 - s2, r1 - r2));
    std::set<Rat> critical(seq.critical_values.begin(), seq.critical_values.end());
    bool ok = true;
    uint64_t all = full_mask(n);
    for (const Rat& lambda : candidates) {
      if (critical.count(lambda)) continue;
      Rat best = 0;
      uint64_t count = 0;
      for (uint64_t mask = 0; mask <= all; ++mask) {
        Rat g = lambda * table.rank[mask] - popcount(mask);
        if (g < best) {
          best = g;
          count = 1;
        } else if (g == best) {
          ++count;
        }
      }
      if (count > 1) ok = false;
    }
    std::ostringstream d;
    d << candidates.size() << " candidate ratios checked; only the " << seq.steps()
      << " critical values admit multiple minimizers";
    out.push_back(check(name + "/critical-uniqueness", ok, d.str()));
  }
  return out;
}

VerifyReport run_verify_suite(const std::string& suite, uint64_t seed) {
  if (suite == "opt-identity") return suite_opt_identity();
  if (suite == "greedy-frequency") return suite_greedy_frequency(seed);
  if (suite == "principal-structure") return suite_principal_structure();
  if (suite == "partition-proxy") return suite_partition_proxy();
  if (suite == "selection-frequency") return suite_selection_frequency(seed);
  if (suite == "density-cocircuit") return suite_density_cocircuit();
  throw InputError("unknown verify suite '" + suite + "'");
}

std::vector<std::string> verify_suite_names() {
  return {"opt-identity",      "greedy-frequency",    "principal-structure",
          "partition-proxy",   "selection-frequency", "density-cocircuit"};
}

}  // namespace matsec
