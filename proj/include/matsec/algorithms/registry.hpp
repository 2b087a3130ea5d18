#pragma once

#include <map>
#include <string>
#include <vector>

#include "matsec/matroid_io.hpp"
#include "matsec/online.hpp"

namespace matsec {

// A named algorithm bound to a concrete instance: the matroid the ratio is
// measured against (usually the instance itself; the cographic rules play
// on the cographic matroid of a graph instance) plus a per-trial factory.
struct AlgorithmSpec {
  std::string name;
  MatroidPtr target;
  AlgorithmFactory factory;
  bool irrational_prob = false;  // exact mode must run at high precision
};

// Names: classical, dense-threshold, principal-threshold, cographic,
// cographic-3base, low-density, greedy, column-sparse, log-rank,
// reject-all. Parameters are name=value strings (e.g. p=e^-1/2,
// simplify=1, known-rank=0, bound=20).
AlgorithmSpec make_algorithm(const std::string& name,
                             const std::map<std::string, std::string>& params,
                             const ParsedMatroid& instance);

std::vector<std::string> algorithm_names();

}  // namespace matsec
