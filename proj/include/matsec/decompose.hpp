#pragma once

#include <utility>
#include <vector>

#include "matsec/density.hpp"
#include "matsec/matroid.hpp"

namespace matsec {

// Exact convex combination of independent sets whose indicator vectors
// average to the all-(1/gamma) vector: sum of coeff * chi_I = (1/gamma) 1,
// coefficients positive and summing to one.
struct ConvexDecomposition {
  std::vector<std::pair<std::vector<int>, Rat>> terms;
  Rat gamma;
};

// With gamma = a/b in lowest terms, covers the b-fold parallel replication
// of the ground set by a independent sets (feasible by the matroid
// partition theorem exactly when gamma <= a/b), then prunes surplus
// occurrences so every element lies in exactly b of the a sets. Weighting
// each set 1/a gives the identity, which is re-verified exactly before
// returning. Produces at most a <= n distinct sets.
ConvexDecomposition convex_decomposition(MatroidPtr m, const EnumerationOptions& opts = {});

}  // namespace matsec
