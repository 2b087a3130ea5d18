#pragma once

#include <array>
#include <vector>

#include "matsec/matroid.hpp"
#include "matsec/multigraph.hpp"

namespace matsec {

// Cover of the ground set by k independent sets, or an Edmonds
// certificate X with k * r(X) < |X| when no cover exists.
struct PartitionCover {
  bool feasible = false;
  std::vector<std::vector<int>> parts;
  std::vector<int> violating_set;
};

// Matroid-union augmenting paths over k copies of the oracle. BFS explores
// sets and exchange arcs in ascending index order, so certificates and
// covers are deterministic. Each part is re-verified independent and the
// union re-verified to cover E before returning.
PartitionCover partition_cover(const Matroid& m, int k);

// Three spanning trees T_i of a 3-edge-connected multigraph whose
// complements B_i = E \ T_i (cobases of the cographic matroid) cover E.
struct ThreeCobaseCover {
  std::array<std::vector<int>, 3> cobases;
  std::array<std::vector<int>, 3> trees;
};

ThreeCobaseCover three_cobase_cover(const Multigraph& g);

}  // namespace matsec
