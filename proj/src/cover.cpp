#include "matsec/cover.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "matsec/errors.hpp"
#include "matsec/families.hpp"

namespace matsec {

namespace {

// One augmentation attempt: place `e` into some part, shifting assigned
// elements along a shortest exchange path. `color[x]` is the part of x or
// -1. Returns false when no augmenting path exists; `reached` then holds
// the set of explored elements, which certifies infeasibility.
bool augment(const Matroid& m, int k, std::vector<int>& color, int e,
             std::vector<int>& reached) {
  int n = m.size();
  std::vector<std::vector<int>> sets(k);
  for (int x = 0; x < n; ++x)
    if (color[x] >= 0) sets[color[x]].push_back(x);

  std::vector<int> parent(n, -2);  // -2 unvisited, -1 BFS root
  std::deque<int> queue;
  parent[e] = -1;
  queue.push_back(e);
  reached.clear();

  auto shift_along_path = [&](int x, int sink_set) {
    // x joins sink_set; its predecessor joins x's old set, and so on back
    // to the unassigned root e. Shortest (BFS) paths have no shortcut
    // arcs, which keeps every part independent under the combined shift.
    int into = sink_set;
    while (true) {
      int old = color[x];
      color[x] = into;
      int pred = parent[x];
      if (pred < 0) break;
      into = old;
      x = pred;
    }
  };

  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    reached.push_back(x);

    for (int j = 0; j < k; ++j) {
      if (color[x] == j) continue;
      if (m.independent_with(sets[j], x)) {
        shift_along_path(x, j);
        return true;
      }
      // Exchange arcs: x -> y for y in the unique circuit of x in set j.
      for (int y : sets[j]) {
        if (parent[y] != -2) continue;
        std::vector<int> swapped;
        swapped.reserve(sets[j].size());
        for (int z : sets[j])
          if (z != y) swapped.push_back(z);
        if (m.independent_with(swapped, x)) {
          parent[y] = x;
          queue.push_back(y);
        }
      }
    }
  }
  return false;
}

}  // namespace

PartitionCover partition_cover(const Matroid& m, int k) {
  if (k <= 0) throw InputError("partition_cover needs k >= 1");
  if (!loops(m).empty())
    throw InputError("partition_cover requires a loopless matroid");
  int n = m.size();
  std::vector<int> color(n, -1);

  PartitionCover out;
  std::vector<int> reached;
  for (int e = 0; e < n; ++e) {
    if (!augment(m, k, color, e, reached)) {
      std::sort(reached.begin(), reached.end());
      long long r = m.rank(reached);
      if (static_cast<long long>(k) * r >= static_cast<long long>(reached.size()))
        throw InternalCheckError("infeasibility certificate fails k*r(X) < |X|");
      out.feasible = false;
      out.violating_set = std::move(reached);
      return out;
    }
  }

  out.feasible = true;
  out.parts.assign(k, {});
  for (int x = 0; x < n; ++x) out.parts[color[x]].push_back(x);
  for (const auto& part : out.parts)
    if (!m.independent(part))
      throw InternalCheckError("partition_cover produced a dependent part");
  return out;
}

ThreeCobaseCover three_cobase_cover(const Multigraph& g) {
  if (!is_3_edge_connected(g))
    throw InputError("three_cobase_cover requires a 3-edge-connected graph");

  CographicMatroid dual(g);
  PartitionCover cover = partition_cover(dual, 3);
  if (!cover.feasible)
    throw InternalCheckError("3-edge-connected graph has no 3-cover of its cographic matroid");

  ThreeCobaseCover out;
  int m = g.edge_count();
  int rank = graphic_rank(g);
  for (int i = 0; i < 3; ++i) {
    // Extend the cographic-independent part to a cobase: pick a spanning
    // tree inside the complement, which exists because the complement of
    // an independent set still spans.
    std::vector<bool> in_part(m, false);
    for (int e : cover.parts[i]) in_part[e] = true;
    std::vector<int> complement;
    for (int e = 0; e < m; ++e)
      if (!in_part[e]) complement.push_back(e);
    std::vector<int> tree = spanning_forest(g, complement);
    if (static_cast<int>(tree.size()) != rank)
      throw InternalCheckError("complement of a cographic-independent set does not span");
    std::vector<bool> in_tree(m, false);
    for (int e : tree) in_tree[e] = true;
    for (int e = 0; e < m; ++e)
      if (!in_tree[e]) out.cobases[i].push_back(e);
    out.trees[i] = std::move(tree);
  }

  // Every edge must miss at least one tree.
  for (int e = 0; e < m; ++e) {
    bool covered = false;
    for (int i = 0; i < 3 && !covered; ++i)
      covered = std::find(out.cobases[i].begin(), out.cobases[i].end(), e) !=
                out.cobases[i].end();
    if (!covered)
      throw InternalCheckError("cobases fail to cover edge " + std::to_string(e));
  }
  return out;
}

}  // namespace matsec
