#include <fstream>

#include "doctest.h"
#include "matsec/density.hpp"
#include "matsec/errors.hpp"
#include "matsec/families.hpp"
#include "matsec/fixtures.hpp"
#include "matsec/matroid_io.hpp"
#include "matsec/smallset.hpp"
#include "oracles.hpp"

using namespace matsec;
using namespace matsec::testing;

TEST_CASE("graphic matroid agrees with DFS forest check on all subsets") {
  for (const Multigraph& g : {complete_graph(4), theta_graph(), triangle_pendant_graph()}) {
    GraphicMatroid m(g);
    uint64_t total = uint64_t{1} << m.size();
    for (uint64_t mask = 0; mask < total; ++mask) {
      auto edges = mask_to_set(mask);
      CHECK(m.independent(edges) == is_forest_dfs(g, edges));
    }
  }
}

TEST_CASE("cographic matroid agrees with the spanning-complement check and dual rank") {
  for (const Multigraph& g : {complete_graph(4), cycle_graph(4), theta_graph()}) {
    GraphicMatroid primal(g);
    CographicMatroid dual(g);
    int n = dual.size();
    uint64_t total = uint64_t{1} << n;
    uint64_t all = total - 1;
    for (uint64_t mask = 0; mask < total; ++mask) {
      auto edges = mask_to_set(mask);
      CHECK(dual.independent(edges) == complement_spans(g, edges));
      // r*(X) = |X| + r(E \ X) - r(E)
      int dual_rank = dual.rank_mask(mask);
      int expect = popcount(mask) + primal.rank_mask(all & ~mask) - primal.full_rank();
      CHECK(dual_rank == expect);
    }
  }
}

TEST_CASE("self-loops are graphic loops and cographic coloops") {
  Multigraph g;
  g.vertices = 2;
  g.add_edge(0, 1);
  g.add_edge(0, 1);
  g.add_edge(1, 1);
  GraphicMatroid gm(g);
  CHECK(loops(gm) == std::vector<int>{2});
  CographicMatroid cm(g);
  CHECK(cm.independent({2}));
  // A coloop is in every basis: rank drops when it is excluded.
  CHECK(cm.full_rank() == 2);
  CHECK(cm.rank_mask(0b011) == 1);
}

TEST_CASE("linear matroid over Q agrees with transpose row reduction") {
  std::vector<std::vector<Rat>> rows = {
      {Rat(1), Rat(0), Rat(1), make_rat(1, 2), Rat(0)},
      {Rat(0), Rat(1), Rat(1), Rat(0), Rat(0)},
      {Rat(2), Rat(0), Rat(2), Rat(1), Rat(0)},
  };
  LinearMatroid m(rows);
  uint64_t total = uint64_t{1} << m.size();
  for (uint64_t mask = 0; mask < total; ++mask) {
    auto cols = mask_to_set(mask);
    CHECK(m.independent(cols) == columns_independent_rowreduce(rows, cols));
  }
  CHECK(loops(m) == std::vector<int>{4});
}

TEST_CASE("gf2 path matches exact arithmetic on 0/1 matrices") {
  std::vector<std::vector<Rat>> rows = {
      {Rat(1), Rat(1), Rat(0), Rat(1), Rat(0)},
      {Rat(0), Rat(1), Rat(1), Rat(1), Rat(0)},
      {Rat(1), Rat(0), Rat(1), Rat(1), Rat(1)},
  };
  LinearMatroid gf2(rows, true);
  uint64_t total = uint64_t{1} << gf2.size();
  for (uint64_t mask = 0; mask < total; ++mask) {
    auto cols = mask_to_set(mask);
    // Over GF(2), {0,1,2} sums to zero while it is independent over Q;
    // compare against a hand-rolled GF(2) eliminator.
    std::vector<uint64_t> vecs;
    bool indep = true;
    for (int c : cols) {
      uint64_t v = 0;
      for (size_t r = 0; r < rows.size(); ++r)
        if (rows[r][c] == 1) v |= uint64_t{1} << r;
      for (uint64_t p : vecs)
        if (v & (p & -p)) v ^= p;
      if (v == 0) {
        indep = false;
        break;
      }
      vecs.push_back(v);
    }
    CHECK(gf2.independent(cols) == indep);
  }
  CHECK_FALSE(gf2.independent({0, 1, 2}));  // GF(2) dependency invisible over Q
}

TEST_CASE("column sparsity") {
  // Vertex-edge incidence pattern of a loopless graph has two nonzeros
  // per column.
  Multigraph g = complete_graph(4);
  std::vector<std::vector<Rat>> rows(g.vertices, std::vector<Rat>(g.edge_count(), Rat(0)));
  for (int e = 0; e < g.edge_count(); ++e) {
    rows[g.edges[e].first][e] = 1;
    rows[g.edges[e].second][e] = -1;
  }
  CHECK(LinearMatroid(rows).column_sparsity() == 2);

  std::vector<std::vector<Rat>> id3 = {
      {Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(1), Rat(0)}, {Rat(0), Rat(0), Rat(1)}};
  CHECK(LinearMatroid(id3).column_sparsity() == 1);

  std::vector<std::vector<Rat>> with_zero = {{Rat(1), Rat(0)}, {Rat(1), Rat(0)}};
  LinearMatroid z(with_zero);
  CHECK(z.column_sparsity() == 2);
  CHECK(loops(z) == std::vector<int>{1});
}

TEST_CASE("bridges and two-edge-connected pieces") {
  auto p3 = bridges_and_2ecc(path_graph(3));
  CHECK(p3.bridges == std::vector<int>{0, 1, 2});
  CHECK(p3.components.empty());

  auto tri = bridges_and_2ecc(cycle_graph(3));
  CHECK(tri.bridges.empty());
  REQUIRE(tri.components.size() == 1);
  CHECK(tri.components[0] == std::vector<int>{0, 1, 2});

  // Two triangles joined by one edge.
  Multigraph g;
  g.vertices = 6;
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 0);
  g.add_edge(2, 3);  // bridge
  g.add_edge(3, 4);
  g.add_edge(4, 5);
  g.add_edge(5, 3);
  auto two = bridges_and_2ecc(g);
  CHECK(two.bridges == std::vector<int>{3});
  REQUIRE(two.components.size() == 2);
  CHECK(two.components[0] == std::vector<int>{0, 1, 2});
  CHECK(two.components[1] == std::vector<int>{4, 5, 6});
}

TEST_CASE("series contraction") {
  // Every edge pair of a cycle is a 2-cut: one class, degenerate output.
  auto c5 = series_contract(cycle_graph(5));
  CHECK(c5.classes.size() == 1);
  CHECK(c5.classes[0].size() == 5);
  CHECK(c5.graph.vertices == 1);
  CHECK(c5.graph.edge_count() == 1);
  CHECK(is_3_edge_connected(c5.graph));

  // K4 is already 3-edge-connected.
  auto k4 = series_contract(complete_graph(4));
  CHECK(k4.classes.size() == 6);
  CHECK(k4.graph.edge_count() == 6);
  CHECK(is_3_edge_connected(k4.graph));

  // Theta graph: three serial pairs become three parallel edges.
  auto th = series_contract(theta_graph());
  CHECK(th.classes.size() == 3);
  CHECK(th.graph.vertices == 2);
  CHECK(th.graph.edge_count() == 3);
  for (const auto& cls : th.classes) CHECK(cls.size() == 2);

  CHECK_THROWS_AS(series_contract(path_graph(2)), InputError);
}

TEST_CASE("edge connectivity predicates") {
  CHECK(is_2_edge_connected(cycle_graph(4)));
  CHECK_FALSE(is_2_edge_connected(path_graph(2)));
  CHECK(is_3_edge_connected(complete_graph(4)));
  CHECK(is_3_edge_connected(prism_graph()));
  CHECK_FALSE(is_3_edge_connected(theta_graph()));
  CHECK_FALSE(is_3_edge_connected(cycle_graph(4)));
}

TEST_CASE("parser round trips") {
  auto u = parse_matroid_text("uniform 4 2\n");
  CHECK(u.kind == "uniform");
  CHECK(u.matroid->size() == 4);
  CHECK(u.matroid->full_rank() == 2);

  auto g = parse_matroid_text("graph 3\na 0 1\nb 1 2\nc 0 2\n");
  CHECK(g.kind == "graph");
  REQUIRE(g.graph.has_value());
  CHECK(g.matroid->full_rank() == 2);
  CHECK(g.element_names == std::vector<std::string>{"a", "b", "c"});

  auto m = parse_matroid_text("matrix 2x3\n1 0 1\n0 1 1\n");
  CHECK(m.kind == "matrix");
  CHECK(m.matroid->full_rank() == 2);
  CHECK_FALSE(m.matroid->independent({0, 1, 2}));

  auto p = parse_matroid_text("partition\npart 1 0 1\npart 1 2\n");
  CHECK(p.matroid->size() == 3);
  CHECK(p.matroid->full_rank() == 2);

  auto with_comments = parse_matroid_text("# a triangle\ngraph 3\na 0 1\nb 1 2\nc 0 2\n");
  CHECK(with_comments.matroid->size() == 3);
}

TEST_CASE("parser rejects malformed input") {
  CHECK_THROWS_AS(parse_matroid_text("uniform 2 5\n"), ParseError);
  CHECK_THROWS_AS(parse_matroid_text("frobnicate 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_matroid_text("graph 2\na 0 5\n"), ParseError);
  CHECK_THROWS_AS(parse_matroid_text("matrix 2x2\n1 0\n"), ParseError);
  CHECK_THROWS_AS(parse_matroid_text("matrix 1x2\n1 0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_matroid_text("partition\npart 3 0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_matroid_text("partition\npart 1 0 0\n"), InputError);
  CHECK_THROWS_AS(parse_matroid_text(""), ParseError);
  CHECK_THROWS_AS(parse_matroid_text("matrix 1x1 frog\n1\n"), ParseError);
}

TEST_CASE("dsum files") {
  std::ofstream("/tmp/matsec_u13.m") << "uniform 3 1\n";
  std::ofstream("/tmp/matsec_free2.m") << "uniform 2 2\n";
  std::ofstream("/tmp/matsec_sum.m") << "dsum\n/tmp/matsec_u13.m\n/tmp/matsec_free2.m\n";
  auto ds = parse_matroid_file("/tmp/matsec_sum.m");
  CHECK(ds.kind == "dsum");
  CHECK(ds.matroid->size() == 5);
  CHECK(ds.matroid->full_rank() == 3);
  CHECK(ds.matroid->independent({0, 3, 4}));
  CHECK_FALSE(ds.matroid->independent({0, 1}));
}

TEST_CASE("every family fixture passes first-principles density comparison") {
  for (const auto& fx : family_fixtures()) {
    if (!loops(*fx.matroid).empty()) continue;
    CHECK(density(*fx.matroid).value == naive_density(*fx.matroid));
  }
}
