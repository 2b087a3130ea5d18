#pragma once

#include <vector>

#include "matsec/matroid.hpp"
#include "matsec/rational.hpp"

namespace matsec {

struct EnumerationOptions {
  // Max ground size for exhaustive subset enumeration (per contraction
  // step in the principal sequence). Uniform and partition matroids use
  // closed forms regardless of size.
  int bound = 20;
};

// gamma = max over nonempty X of |X| / r(X), with the inclusionwise
// maximal witness attaining it.
struct Density {
  Rat value;
  std::vector<int> witness;
};

// Requires a loopless matroid (r({e}) = 1 for all e).
Density density(const Matroid& m, const EnumerationOptions& opts = {});

// gamma attained by the entire ground set: |X|/r(X) <= |E|/r(E) for all X.
bool is_uniformly_dense(const Matroid& m, const EnumerationOptions& opts = {});

}  // namespace matsec
