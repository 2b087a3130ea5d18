#include "matsec/fixtures.hpp"

#include "matsec/families.hpp"
#include "matsec/minor.hpp"

namespace matsec {

MatroidPtr graphic(const Multigraph& g) { return std::make_shared<GraphicMatroid>(g); }
MatroidPtr cographic(const Multigraph& g) { return std::make_shared<CographicMatroid>(g); }

Multigraph triangle_pendant_graph() {
  Multigraph g;
  g.vertices = 4;
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 0);
  g.add_edge(2, 3);
  return g;
}

Multigraph k5_pendant_path_graph(int path_edges) {
  Multigraph g = complete_graph(5);
  for (int i = 0; i < path_edges; ++i) {
    int v = g.vertices++;
    g.add_edge(i == 0 ? 0 : v - 1, v);
  }
  return g;
}

std::vector<Fixture> principal_fixtures() {
  std::vector<Fixture> out;
  out.push_back({"u24", std::make_shared<UniformMatroid>(4, 2)});
  out.push_back({"dsum-u13-free2",
                 direct_sum({std::make_shared<UniformMatroid>(3, 1), free_matroid(2)})});
  out.push_back({"triangle-pendant", graphic(triangle_pendant_graph())});
  out.push_back({"k4", graphic(complete_graph(4))});
  out.push_back({"dsum-u14-u35-free3",
                 direct_sum({std::make_shared<UniformMatroid>(4, 1),
                             std::make_shared<UniformMatroid>(5, 3), free_matroid(3)})});
  out.push_back({"k5-pendant-path3", graphic(k5_pendant_path_graph(3))});
  out.push_back({"cographic-k4", cographic(complete_graph(4))});
  out.push_back({"partition-21", std::make_shared<PartitionMatroid>(
                                     std::vector<std::vector<int>>{{0, 1}, {2}},
                                     std::vector<int>{1, 1})});
  return out;
}

std::vector<Fixture> exact_fixtures() {
  std::vector<Fixture> out;
  out.push_back({"u12", std::make_shared<UniformMatroid>(2, 1)});
  out.push_back({"u23", std::make_shared<UniformMatroid>(3, 2)});
  out.push_back({"u24", std::make_shared<UniformMatroid>(4, 2)});
  out.push_back({"u15", std::make_shared<UniformMatroid>(5, 1)});
  out.push_back({"triangle", graphic(cycle_graph(3))});
  out.push_back({"k4", graphic(complete_graph(4))});
  out.push_back({"partition-21", std::make_shared<PartitionMatroid>(
                                     std::vector<std::vector<int>>{{0, 1}, {2}},
                                     std::vector<int>{1, 1})});
  out.push_back({"cographic-k4", cographic(complete_graph(4))});
  return out;
}

std::vector<Fixture> family_fixtures() {
  std::vector<Fixture> out;
  out.push_back({"u37", std::make_shared<UniformMatroid>(7, 3)});
  out.push_back({"free4", free_matroid(4)});
  out.push_back({"partition-mixed",
                 std::make_shared<PartitionMatroid>(
                     std::vector<std::vector<int>>{{0, 1, 2}, {3, 4}, {5, 6, 7}},
                     std::vector<int>{2, 1, 1})});
  out.push_back({"graphic-k4", graphic(complete_graph(4))});
  out.push_back({"graphic-theta", graphic(theta_graph())});
  out.push_back({"cographic-k4", cographic(complete_graph(4))});
  out.push_back({"cographic-c4", cographic(cycle_graph(4))});
  {
    // Rank-3 matrix with a parallel pair (columns 3,4) and a loop (column 5).
    std::vector<std::vector<Rat>> rows = {
        {Rat(1), Rat(0), Rat(0), Rat(2), Rat(1), Rat(0)},
        {Rat(0), Rat(1), Rat(0), Rat(0), Rat(0), Rat(0)},
        {Rat(0), Rat(0), Rat(1), Rat(2), Rat(1), Rat(0)},
    };
    out.push_back({"linear-q", std::make_shared<LinearMatroid>(rows)});
  }
  {
    std::vector<std::vector<Rat>> rows = {
        {Rat(1), Rat(1), Rat(0), Rat(1)},
        {Rat(0), Rat(1), Rat(1), Rat(1)},
        {Rat(1), Rat(0), Rat(1), Rat(1)},
    };
    out.push_back({"linear-gf2", std::make_shared<LinearMatroid>(rows, true)});
  }
  out.push_back({"dsum-u13-free2",
                 direct_sum({std::make_shared<UniformMatroid>(3, 1), free_matroid(2)})});
  return out;
}

std::vector<Fixture> cocircuit_fixtures() {
  std::vector<Fixture> out;
  out.push_back({"u24", std::make_shared<UniformMatroid>(4, 2)});
  out.push_back({"u15", std::make_shared<UniformMatroid>(5, 1)});
  out.push_back({"path3", graphic(path_graph(3))});
  out.push_back({"triangle-pendant", graphic(triangle_pendant_graph())});
  out.push_back({"k4", graphic(complete_graph(4))});
  out.push_back({"k5", graphic(complete_graph(5))});
  out.push_back({"cographic-c4", cographic(cycle_graph(4))});
  out.push_back({"theta", graphic(theta_graph())});
  return out;
}

std::vector<Fixture> decomposition_fixtures() {
  std::vector<Fixture> out;
  out.push_back({"u12", std::make_shared<UniformMatroid>(2, 1)});
  out.push_back({"free3", free_matroid(3)});
  out.push_back({"triangle", graphic(cycle_graph(3))});
  out.push_back({"k4", graphic(complete_graph(4))});
  out.push_back({"cographic-c4", cographic(cycle_graph(4))});
  out.push_back({"u24", std::make_shared<UniformMatroid>(4, 2)});
  return out;
}

}  // namespace matsec
