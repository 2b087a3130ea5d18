#include "matsec/cli.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "matsec/cover.hpp"
#include "matsec/decompose.hpp"
#include "matsec/errors.hpp"
#include "matsec/estimate.hpp"
#include "matsec/fixtures.hpp"
#include "matsec/principal.hpp"
#include "matsec/verify.hpp"

namespace matsec {

namespace {

using Json = nlohmann::ordered_json;

std::map<std::string, std::string> parse_kv(const std::vector<std::string>& items) {
  std::map<std::string, std::string> out;
  for (const auto& item : items) {
    auto eq = item.find('=');
    if (eq == std::string::npos)
      throw InputError("parameter '" + item + "' is not of the form key=value");
    out[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return out;
}

void emit(const std::string& text, const std::string& out_path, std::ostream& fallback) {
  if (out_path.empty()) {
    fallback << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw InputError("cannot write output file '" + out_path + "'");
  f << text;
}

Json estimate_json(const RatioEstimate& r) {
  Json j;
  j["trials"] = r.trials;
  j["seed"] = r.seed;
  j["exact"] = r.exact;
  j["opt_mean"] = r.opt_mean;
  j["alg_mean"] = r.alg_mean;
  j["opt_stderr"] = r.opt_stderr;
  j["alg_stderr"] = r.alg_stderr;
  j["ratio_infinite"] = r.ratio_infinite;
  if (!r.ratio_infinite) {
    j["ratio"] = r.ratio;
    j["ratio_stderr"] = r.ratio_stderr;
  }
  if (r.exact) {
    j["opt_exact"] = r.opt_exact;
    j["alg_exact"] = r.alg_exact;
    if (!r.ratio_infinite) j["ratio_exact"] = r.ratio_exact;
  }
  return j;
}

std::string estimate_csv(const RatioEstimate& r) {
  std::ostringstream out;
  out.precision(17);
  out << "trials,seed,exact,opt_mean,opt_stderr,alg_mean,alg_stderr,ratio,ratio_stderr,"
         "ratio_infinite\n";
  out << r.trials << "," << r.seed << "," << (r.exact ? 1 : 0) << "," << r.opt_mean << ","
      << r.opt_stderr << "," << r.alg_mean << "," << r.alg_stderr << ",";
  if (r.ratio_infinite)
    out << ",";
  else
    out << r.ratio << "," << r.ratio_stderr;
  out << "," << (r.ratio_infinite ? 1 : 0) << "\n";
  return out.str();
}

struct CommonOpts {
  std::string matroid_file;
  std::string alg = "classical";
  std::vector<std::string> alg_params;
  std::string weights = "equal";
  std::vector<std::string> weight_params;
  long long trials = 10000;
  uint64_t seed = 1;
  int jobs = 1;
  int bound = 6;
  std::string out_path;
  std::string format = "json";
  std::string transcript;
};

void render_estimate(const RatioEstimate& est, const CommonOpts& opts, std::ostream& out) {
  if (opts.format == "csv")
    emit(estimate_csv(est), opts.out_path, out);
  else
    emit(estimate_json(est).dump(2) + "\n", opts.out_path, out);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"matroid secretary laboratory"};
  app.require_subcommand(1);

  CommonOpts o;
  auto add_common = [&o](CLI::App* cmd, bool with_alg, bool with_trials) {
    cmd->add_option("--matroid", o.matroid_file, "matroid instance file")->required();
    if (with_alg) {
      cmd->add_option("--alg", o.alg, "algorithm name");
      cmd->add_option("--alg-param", o.alg_params, "algorithm parameter key=value");
      cmd->add_option("--weights", o.weights, "weight generator name");
      cmd->add_option("--weight-param", o.weight_params, "weight parameter key=value");
      cmd->add_option("--seed", o.seed, "master seed");
    }
    if (with_trials) {
      cmd->add_option("--trials", o.trials, "number of trials");
      cmd->add_option("--jobs", o.jobs, "worker threads");
      cmd->add_option("--transcript", o.transcript, "write per-trial JSON lines here");
    }
    cmd->add_option("--out", o.out_path, "output file (default stdout)");
    cmd->add_option("--format", o.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
  };

  auto* sim = app.add_subcommand("simulate", "seeded Monte Carlo ratio estimate");
  add_common(sim, true, true);
  auto* exa = app.add_subcommand("exact", "exact expectations by full enumeration");
  add_common(exa, true, false);
  exa->add_option("--bound", o.bound, "max n for (n!)^2 enumeration");

  auto* pri = app.add_subcommand("principal", "principal sequence as JSON");
  add_common(pri, false, false);

  std::string suite;
  uint64_t verify_seed = 1;
  auto* ver = app.add_subcommand("verify", "run a named verification suite");
  ver->add_option("suite", suite, "suite name, or 'all'")->required();
  ver->add_option("--seed", verify_seed, "seed for Monte Carlo suites");
  ver->add_option("--out", o.out_path, "output file (default stdout)");
  ver->add_option("--format", o.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  int cover_k = 2;
  bool three_cobase = false;
  auto* cov = app.add_subcommand("cover", "partition into independent sets");
  add_common(cov, false, false);
  cov->add_option("--k", cover_k, "number of independent sets");
  cov->add_flag("--three-cobase", three_cobase,
                "three cobases of a 3-edge-connected graph instead");

  auto* dec = app.add_subcommand("decompose", "convex decomposition of (1/gamma) * 1");
  add_common(dec, false, false);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (sim->parsed() || exa->parsed()) {
      ParsedMatroid instance = parse_matroid_file(o.matroid_file);
      AlgorithmSpec spec = make_algorithm(o.alg, parse_kv(o.alg_params), instance);
      WeightGenerator gen = WeightGenerator::parse(o.weights, parse_kv(o.weight_params));
      if (sim->parsed()) {
        std::ofstream tfile;
        std::ostream* tout = nullptr;
        if (!o.transcript.empty()) {
          tfile.open(o.transcript, std::ios::binary);
          if (!tfile) throw InputError("cannot write transcript file");
          tout = &tfile;
        }
        RatioEstimate est =
            simulate_experiment(spec, gen, o.trials, o.seed, o.jobs, tout);
        render_estimate(est, o, out);
      } else {
        AdversaryWeights w = gen.generate(spec.target->size(), 0);
        RatioEstimate est = exact_experiment(spec, w, o.bound);
        est.seed = o.seed;
        render_estimate(est, o, out);
      }
      return 0;
    }

    if (pri->parsed()) {
      ParsedMatroid instance = parse_matroid_file(o.matroid_file);
      PrincipalSequence seq = principal_sequence(instance.matroid);
      Json j;
      j["steps"] = seq.steps();
      j["sets"] = Json::array();
      for (int i = 0; i < seq.steps(); ++i) {
        Json step;
        step["lambda"] = rat_str(seq.critical_values[i]);
        step["set"] = seq.nested_sets[i];
        step["ground"] = seq.step_ground_sets[i];
        step["rank"] = seq.step_ranks[i];
        step["minor_density"] = rat_str(density(*seq.minors[i]).value);
        j["sets"].push_back(step);
      }
      emit(j.dump(2) + "\n", o.out_path, out);
      return 0;
    }

    if (ver->parsed()) {
      std::vector<std::string> suites =
          suite == "all" ? verify_suite_names() : std::vector<std::string>{suite};
      Json all = Json::array();
      bool pass = true;
      std::ostringstream text;
      for (const auto& s : suites) {
        VerifyReport rep = run_verify_suite(s, verify_seed);
        pass = pass && rep.pass;
        Json jr;
        jr["suite"] = rep.suite;
        jr["pass"] = rep.pass;
        jr["checks"] = Json::array();
        for (const auto& c : rep.checks) {
          Json jc;
          jc["name"] = c.name;
          jc["pass"] = c.pass;
          jc["detail"] = c.detail;
          jr["checks"].push_back(jc);
          text << "[" << rep.suite << "] " << (c.pass ? "PASS" : "FAIL") << " " << c.name
               << ": " << c.detail << "\n";
        }
        all.push_back(jr);
      }
      if (o.format == "json")
        emit(all.dump(2) + "\n", o.out_path, out);
      else
        emit(text.str(), o.out_path, out);
      return pass ? 0 : 1;
    }

    if (cov->parsed()) {
      ParsedMatroid instance = parse_matroid_file(o.matroid_file);
      Json j;
      if (three_cobase) {
        if (!instance.graph) throw InputError("--three-cobase needs a graph instance");
        ThreeCobaseCover c = three_cobase_cover(*instance.graph);
        j["cobases"] = {c.cobases[0], c.cobases[1], c.cobases[2]};
        j["trees"] = {c.trees[0], c.trees[1], c.trees[2]};
      } else {
        PartitionCover c = partition_cover(*instance.matroid, cover_k);
        j["feasible"] = c.feasible;
        if (c.feasible)
          j["parts"] = c.parts;
        else
          j["violating_set"] = c.violating_set;
      }
      emit(j.dump(2) + "\n", o.out_path, out);
      return 0;
    }

    if (dec->parsed()) {
      ParsedMatroid instance = parse_matroid_file(o.matroid_file);
      ConvexDecomposition d = convex_decomposition(instance.matroid);
      Json j;
      j["gamma"] = rat_str(d.gamma);
      j["terms"] = Json::array();
      for (const auto& [set, coeff] : d.terms) {
        Json jt;
        jt["coefficient"] = rat_str(coeff);
        jt["set"] = set;
        j["terms"].push_back(jt);
      }
      emit(j.dump(2) + "\n", o.out_path, out);
      return 0;
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "no subcommand executed\n";
  return 2;
}

}  // namespace matsec
