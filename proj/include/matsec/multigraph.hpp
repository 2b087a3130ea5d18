#pragma once

#include <span>
#include <utility>
#include <vector>

namespace matsec {

// Undirected multigraph with stable integer edge ids. Self-loops and
// parallel edges are allowed.
struct Multigraph {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;

  int edge_count() const { return static_cast<int>(edges.size()); }
  bool is_self_loop(int e) const { return edges[e].first == edges[e].second; }
  void add_edge(int u, int v);
};

// Connected components of the vertex set after deleting `removed_edges`.
int component_count(const Multigraph& g, std::span<const int> removed_edges = {});

// Number of vertices minus number of components: the forest rank.
int graphic_rank(const Multigraph& g);

bool is_connected(const Multigraph& g);
bool is_2_edge_connected(const Multigraph& g);
// Connected and no removal of <= 2 non-loop edges disconnects it.
bool is_3_edge_connected(const Multigraph& g);

struct BridgeDecomposition {
  std::vector<int> bridges;
  // Edge sets of the 2-edge-connected pieces left after bridge removal
  // (self-loops stay with the piece of their vertex). Pieces are ordered
  // by smallest edge id.
  std::vector<std::vector<int>> components;
};

BridgeDecomposition bridges_and_2ecc(const Multigraph& g);

// Serial classes of a 2-edge-connected multigraph: e ~ f when {e, f} is a
// minimal edge cut (self-loops are singleton classes). Pairwise cut tests;
// intended for desk-scale graphs.
std::vector<std::vector<int>> serial_classes(const Multigraph& g);

struct SeriesContraction {
  Multigraph graph;                      // all but one edge per class contracted
  std::vector<std::vector<int>> classes; // original edge ids per class
  std::vector<int> representative;       // class -> surviving original edge id
  // graph.edges[i] corresponds to classes[i] / representative[i].
};

// Contract all but the lowest-id edge of every serial class. Requires a
// 2-edge-connected input; the output is verified 3-edge-connected.
SeriesContraction series_contract(const Multigraph& g);

// Edge ids of a spanning forest of (V, allowed).
std::vector<int> spanning_forest(const Multigraph& g, std::span<const int> allowed);

// Small named builders used by fixtures and tests.
Multigraph complete_graph(int k);
Multigraph cycle_graph(int n);
Multigraph path_graph(int edges);
Multigraph theta_graph();  // two vertices joined by three length-2 paths
Multigraph prism_graph();  // triangular prism, 3-edge-connected

}  // namespace matsec
