#include "matsec/algorithms/registry.hpp"

#include "matsec/algorithms/classical.hpp"
#include "matsec/algorithms/logrank.hpp"
#include "matsec/algorithms/principal_alg.hpp"
#include "matsec/algorithms/threshold.hpp"
#include "matsec/algorithms/zeroinfo.hpp"
#include "matsec/errors.hpp"
#include "matsec/families.hpp"

namespace matsec {

namespace {

std::string param(const std::map<std::string, std::string>& params, const char* key,
                  const char* fallback) {
  auto it = params.find(key);
  return it == params.end() ? std::string(fallback) : it->second;
}

bool flag(const std::map<std::string, std::string>& params, const char* key,
          bool fallback) {
  auto it = params.find(key);
  if (it == params.end()) return fallback;
  if (it->second == "1" || it->second == "true") return true;
  if (it->second == "0" || it->second == "false") return false;
  throw InputError(std::string("boolean parameter ") + key + " must be 0/1");
}

}  // namespace

AlgorithmSpec make_algorithm(const std::string& name,
                             const std::map<std::string, std::string>& params,
                             const ParsedMatroid& instance) {
  AlgorithmSpec spec;
  spec.name = name;
  spec.target = instance.matroid;

  if (name == "classical") {
    spec.factory = [] { return std::make_unique<ClassicalSecretary>(); };
    return spec;
  }
  if (name == "reject-all") {
    spec.factory = [] { return std::make_unique<RejectAll>(); };
    return spec;
  }
  if (name == "greedy") {
    spec.factory = [] { return std::make_unique<ArrivalGreedy>(); };
    return spec;
  }
  if (name == "dense-threshold") {
    Prob p = Prob::parse(param(params, "p", "e^-1/2"));
    spec.irrational_prob = !p.is_rational();
    int rank = instance.matroid->full_rank();
    spec.factory = [rank, p] { return std::make_unique<DenseThreshold>(rank, p); };
    return spec;
  }
  if (name == "principal-threshold") {
    Prob p = Prob::parse(param(params, "p", "e^-1/2"));
    spec.irrational_prob = !p.is_rational();
    EnumerationOptions opts;
    opts.bound = std::stoi(param(params, "bound", "20"));
    auto plan = PrincipalPlan::build(instance.matroid, opts);
    spec.factory = [plan, p] { return std::make_unique<PrincipalThreshold>(plan, p); };
    return spec;
  }
  if (name == "cographic" || name == "cographic-3base") {
    if (!instance.graph)
      throw InputError("the cographic rules need a graph instance");
    auto plan = CographicPlan::build(*instance.graph);
    spec.target = plan->target;
    bool pure = name == "cographic-3base";
    spec.factory = [plan, pure] { return std::make_unique<CographicCover>(plan, pure); };
    return spec;
  }
  if (name == "low-density") {
    bool simplify = flag(params, "simplify", false);
    EnumerationOptions opts;
    opts.bound = std::stoi(param(params, "bound", "20"));
    auto plan = LowDensityPlan::build(instance.matroid, simplify, opts);
    spec.factory = [plan] { return std::make_unique<LowDensitySelect>(plan); };
    return spec;
  }
  if (name == "column-sparse") {
    auto matrix = std::dynamic_pointer_cast<const LinearMatroid>(instance.matroid);
    if (!matrix) throw InputError("column-sparse needs a matrix instance");
    auto plan = ColumnSparsePlan::build(matrix);
    spec.factory = [plan] { return std::make_unique<ColumnSparseSelect>(plan); };
    return spec;
  }
  if (name == "log-rank") {
    std::optional<int> rank;
    if (flag(params, "known-rank", true)) rank = instance.matroid->full_rank();
    spec.factory = [rank] { return std::make_unique<LogRank>(rank); };
    return spec;
  }
  throw InputError("unknown algorithm '" + name + "'");
}

std::vector<std::string> algorithm_names() {
  return {"classical",  "dense-threshold", "principal-threshold",
          "cographic",  "cographic-3base", "low-density",
          "greedy",     "column-sparse",   "log-rank",
          "reject-all"};
}

}  // namespace matsec
