#pragma once

#include <memory>
#include <vector>

#include "matsec/density.hpp"
#include "matsec/minor.hpp"

namespace matsec {

// Minimizers of the submodular surplus g(X) = lambda * r(X) - |X| over all
// subsets, by exhaustive exact minimization. The minimizer family of a
// submodular function is a lattice; the inclusionwise minimal and maximal
// minimizers are its bottom and top, verified on output.
struct SurplusMinimizers {
  Rat min_value;
  std::vector<int> minimal;
  std::vector<int> maximal;
  uint64_t minimizer_count = 0;
};

SurplusMinimizers rank_surplus_minimizers(const Matroid& m, const Rat& lambda,
                                          const EnumerationOptions& opts = {});

// Nested sets F_0 = {} < F_1 < ... < F_k = E with strictly decreasing
// critical values lambda_1 > ... > lambda_k >= 1. Step i carries the minor
// (M / F_{i-1}) | (F_i \ F_{i-1}), which is uniformly dense with density
// lambda_i = |E_i| / r_i. Built by repeatedly contracting the maximal
// densest set of the remaining matroid.
struct PrincipalSequence {
  std::vector<std::vector<int>> nested_sets;  // F_1 .. F_k
  std::vector<Rat> critical_values;           // lambda_1 .. lambda_k
  std::vector<std::shared_ptr<const MinorView>> minors;
  std::vector<std::vector<int>> step_ground_sets;  // E_i = F_i \ F_{i-1}
  std::vector<int> step_ranks;                     // r_i

  int steps() const { return static_cast<int>(critical_values.size()); }
};

PrincipalSequence principal_sequence(MatroidPtr m, const EnumerationOptions& opts = {});

// The per-step minors; each is checked uniformly dense with density
// exactly lambda_i before being returned.
std::vector<std::shared_ptr<const MinorView>> principal_minors(
    MatroidPtr m, const EnumerationOptions& opts = {});

}  // namespace matsec
