#include "matsec/multigraph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "matsec/errors.hpp"

namespace matsec {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace

void Multigraph::add_edge(int u, int v) {
  if (u < 0 || u >= vertices || v < 0 || v >= vertices)
    throw InputError("edge endpoint out of range");
  edges.emplace_back(u, v);
}

int component_count(const Multigraph& g, std::span<const int> removed_edges) {
  std::vector<bool> removed(g.edges.size(), false);
  for (int e : removed_edges) removed[e] = true;
  UnionFind uf(g.vertices);
  int comps = g.vertices;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (removed[e]) continue;
    if (uf.unite(g.edges[e].first, g.edges[e].second)) --comps;
  }
  return comps;
}

int graphic_rank(const Multigraph& g) { return g.vertices - component_count(g); }

bool is_connected(const Multigraph& g) { return component_count(g) <= 1; }

bool is_2_edge_connected(const Multigraph& g) {
  if (!is_connected(g)) return false;
  int base = component_count(g);
  for (int e = 0; e < g.edge_count(); ++e) {
    if (g.is_self_loop(e)) continue;
    int removed[1] = {e};
    if (component_count(g, removed) > base) return false;
  }
  return true;
}

bool is_3_edge_connected(const Multigraph& g) {
  if (!is_2_edge_connected(g)) return false;
  int base = component_count(g);
  for (int e = 0; e < g.edge_count(); ++e) {
    if (g.is_self_loop(e)) continue;
    for (int f = e + 1; f < g.edge_count(); ++f) {
      if (g.is_self_loop(f)) continue;
      int removed[2] = {e, f};
      if (component_count(g, removed) > base) return false;
    }
  }
  return true;
}

BridgeDecomposition bridges_and_2ecc(const Multigraph& g) {
  BridgeDecomposition out;
  int n = g.vertices;
  std::vector<std::vector<std::pair<int, int>>> adj(n);  // (neighbor, edge id)
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edges[e];
    if (u == v) continue;  // self-loops are never bridges
    adj[u].emplace_back(v, e);
    adj[v].emplace_back(u, e);
  }

  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<bool> is_bridge(g.edges.size(), false);
  int tick = 0;
  // Iterative lowlink DFS keyed by the entering edge id, so parallel
  // edges are handled correctly.
  struct Frame {
    int v;
    int parent_edge;
    size_t next;
  };
  for (int root = 0; root < n; ++root) {
    if (disc[root] >= 0) continue;
    std::vector<Frame> stack{{root, -1, 0}};
    disc[root] = low[root] = tick++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next < adj[f.v].size()) {
        auto [w, e] = adj[f.v][f.next++];
        if (e == f.parent_edge) continue;
        if (disc[w] < 0) {
          disc[w] = low[w] = tick++;
          stack.push_back({w, e, 0});
        } else {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
      } else {
        int v = f.v;
        int pe = f.parent_edge;
        stack.pop_back();
        if (!stack.empty()) {
          int p = stack.back().v;
          low[p] = std::min(low[p], low[v]);
          if (low[v] > disc[p]) is_bridge[pe] = true;
        }
      }
    }
  }

  for (int e = 0; e < g.edge_count(); ++e)
    if (is_bridge[e]) out.bridges.push_back(e);

  // Components of the bridge-free graph; each surviving edge joins the
  // piece of its endpoints.
  UnionFind uf(n);
  for (int e = 0; e < g.edge_count(); ++e)
    if (!is_bridge[e]) uf.unite(g.edges[e].first, g.edges[e].second);
  std::vector<int> piece_of_root(n, -1);
  for (int e = 0; e < g.edge_count(); ++e) {
    if (is_bridge[e]) continue;
    int root = uf.find(g.edges[e].first);
    if (piece_of_root[root] < 0) {
      piece_of_root[root] = static_cast<int>(out.components.size());
      out.components.emplace_back();
    }
    out.components[piece_of_root[root]].push_back(e);
  }
  return out;
}

std::vector<std::vector<int>> serial_classes(const Multigraph& g) {
  if (!is_2_edge_connected(g)) throw InputError("serial_classes requires 2-edge-connectivity");
  int m = g.edge_count();
  int base = component_count(g);
  std::vector<int> cls(m, -1);
  std::vector<std::vector<int>> classes;
  for (int e = 0; e < m; ++e) {
    if (cls[e] >= 0) continue;
    cls[e] = static_cast<int>(classes.size());
    classes.push_back({e});
    if (g.is_self_loop(e)) continue;  // never in a cut
    for (int f = e + 1; f < m; ++f) {
      if (cls[f] >= 0 || g.is_self_loop(f)) continue;
      int removed[2] = {e, f};
      if (component_count(g, removed) > base) {
        cls[f] = cls[e];
        classes[cls[e]].push_back(f);
      }
    }
  }
  return classes;
}

SeriesContraction series_contract(const Multigraph& g) {
  SeriesContraction out;
  out.classes = serial_classes(g);
  UnionFind uf(g.vertices);
  for (const auto& c : out.classes) {
    out.representative.push_back(c.front());
    for (size_t i = 1; i < c.size(); ++i) {
      auto [u, v] = g.edges[c[i]];
      uf.unite(u, v);
    }
  }
  std::vector<int> new_id(g.vertices, -1);
  int next = 0;
  for (int v = 0; v < g.vertices; ++v) {
    int r = uf.find(v);
    if (new_id[r] < 0) new_id[r] = next++;
  }
  out.graph.vertices = next;
  for (int rep : out.representative) {
    auto [u, v] = g.edges[rep];
    out.graph.add_edge(new_id[uf.find(u)], new_id[uf.find(v)]);
  }
  if (!is_3_edge_connected(out.graph))
    throw InternalCheckError("series contraction did not produce a 3-edge-connected graph");
  return out;
}

std::vector<int> spanning_forest(const Multigraph& g, std::span<const int> allowed) {
  UnionFind uf(g.vertices);
  std::vector<int> forest;
  for (int e : allowed) {
    auto [u, v] = g.edges[e];
    if (u != v && uf.unite(u, v)) forest.push_back(e);
  }
  return forest;
}

Multigraph complete_graph(int k) {
  Multigraph g;
  g.vertices = k;
  for (int u = 0; u < k; ++u)
    for (int v = u + 1; v < k; ++v) g.add_edge(u, v);
  return g;
}

Multigraph cycle_graph(int n) {
  Multigraph g;
  g.vertices = n;
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Multigraph path_graph(int edges) {
  Multigraph g;
  g.vertices = edges + 1;
  for (int i = 0; i < edges; ++i) g.add_edge(i, i + 1);
  return g;
}

Multigraph theta_graph() {
  Multigraph g;
  g.vertices = 5;  // poles 0,1; midpoints 2,3,4
  g.add_edge(0, 2);
  g.add_edge(2, 1);
  g.add_edge(0, 3);
  g.add_edge(3, 1);
  g.add_edge(0, 4);
  g.add_edge(4, 1);
  return g;
}

Multigraph prism_graph() {
  Multigraph g;
  g.vertices = 6;
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 0);
  g.add_edge(3, 4);
  g.add_edge(4, 5);
  g.add_edge(5, 3);
  g.add_edge(0, 3);
  g.add_edge(1, 4);
  g.add_edge(2, 5);
  return g;
}

}  // namespace matsec
