#include "matsec/algorithms/zeroinfo.hpp"

#include <algorithm>
#include <numeric>

#include "matsec/cover.hpp"
#include "matsec/errors.hpp"
#include "matsec/minor.hpp"

namespace matsec {

std::shared_ptr<const CographicPlan> CographicPlan::build(const Multigraph& g) {
  auto plan = std::make_shared<CographicPlan>();
  plan->graph = g;
  plan->target = std::make_shared<CographicMatroid>(g);
  plan->bridge.assign(g.edge_count(), false);
  plan->self_loop.assign(g.edge_count(), false);
  for (int e = 0; e < g.edge_count(); ++e) plan->self_loop[e] = g.is_self_loop(e);

  BridgeDecomposition decomp = bridges_and_2ecc(g);
  for (int e : decomp.bridges) plan->bridge[e] = true;

  for (const auto& piece_edges : decomp.components) {
    // Self-loops are coloops handled globally, not through a piece.
    std::vector<int> core_edges;
    for (int e : piece_edges)
      if (!g.is_self_loop(e)) core_edges.push_back(e);
    if (core_edges.empty()) continue;

    // Induced subgraph on the piece's edges, then series contraction.
    std::vector<int> vertex_map(g.vertices, -1);
    Multigraph sub;
    for (int e : core_edges) {
      for (int v : {g.edges[e].first, g.edges[e].second})
        if (vertex_map[v] < 0) {
          vertex_map[v] = sub.vertices++;
        }
    }
    for (int e : core_edges) sub.add_edge(vertex_map[g.edges[e].first], vertex_map[g.edges[e].second]);

    SeriesContraction sc = series_contract(sub);
    ThreeCobaseCover cover = three_cobase_cover(sc.graph);

    Piece piece;
    for (const auto& cls : sc.classes) {
      std::vector<int> original;
      for (int local : cls) original.push_back(core_edges[local]);
      piece.classes.push_back(std::move(original));
    }
    for (int i = 0; i < 3; ++i) piece.cobase_classes[i] = cover.cobases[i];
    plan->pieces.push_back(std::move(piece));
  }
  plan->three_edge_connected = is_3_edge_connected(g);
  if (plan->three_edge_connected) {
    ThreeCobaseCover cover = three_cobase_cover(g);
    plan->pure_cobases = cover.cobases;
  }
  return plan;
}

CographicCover::CographicCover(std::shared_ptr<const CographicPlan> plan, bool pure)
    : plan_(std::move(plan)), pure_(pure) {
  if (pure_ && !plan_->three_edge_connected)
    throw InputError("the plain three-cobase rule needs a 3-edge-connected graph");
}

void CographicCover::start(const StreamInfo& info, RandomSource& rng) {
  if (info.n != plan_->graph.edge_count()) throw InputError("stream/graph size mismatch");
  if (pure_) {
    int pick = rng.uniform_index(3);
    pure_accept_.assign(info.n, false);
    for (int e : plan_->pure_cobases[pick]) pure_accept_[e] = true;
    return;
  }
  std::vector<std::vector<int>> selected;
  for (const auto& piece : plan_->pieces) {
    int pick = rng.uniform_index(3);
    for (int cls : piece.cobase_classes[pick]) selected.push_back(piece.classes[cls]);
  }
  secretary_.configure(info.n, selected);
}

bool CographicCover::on_reveal(Token t, SessionView& view) {
  if (pure_) return pure_accept_[t.element];
  if (plan_->bridge[t.element]) return false;   // cographic loop
  if (plan_->self_loop[t.element]) return true;  // cographic coloop
  return secretary_.process(t, view);
}

std::shared_ptr<const LowDensityPlan> LowDensityPlan::build(MatroidPtr m, bool simplified,
                                                            const EnumerationOptions& opts) {
  if (!m) throw InputError("null matroid");
  auto plan = std::make_shared<LowDensityPlan>();
  plan->matroid = m;
  plan->simplified = simplified;

  if (!simplified) {
    ConvexDecomposition d = convex_decomposition(m, opts);
    plan->gamma = d.gamma;
    for (auto& [set, coeff] : d.terms) {
      plan->sets.push_back(set);
      plan->coefficients.push_back(coeff);
    }
    return plan;
  }

  plan->classes = parallel_classes(*m);
  std::vector<int> representatives;
  for (auto& cls : plan->classes) {
    std::sort(cls.begin(), cls.end());
    representatives.push_back(cls.front());  // lowest id represents the class
  }
  auto simple = restriction(m, representatives);
  ConvexDecomposition d = convex_decomposition(simple, opts);
  plan->gamma = d.gamma;
  plan->class_of_representative.assign(m->size(), -1);
  for (size_t c = 0; c < plan->classes.size(); ++c)
    plan->class_of_representative[plan->classes[c].front()] = static_cast<int>(c);
  for (auto& [local_set, coeff] : d.terms) {
    std::vector<int> reps;
    for (int local : local_set) reps.push_back(simple->to_base(local));
    plan->sets.push_back(std::move(reps));
    plan->coefficients.push_back(coeff);
  }
  return plan;
}

LowDensitySelect::LowDensitySelect(std::shared_ptr<const LowDensityPlan> plan)
    : plan_(std::move(plan)) {}

void LowDensitySelect::start(const StreamInfo& info, RandomSource& rng) {
  int pick = rng.weighted_index(plan_->coefficients);
  chosen_.assign(info.n, false);
  if (!plan_->simplified) {
    for (int e : plan_->sets[pick]) chosen_[e] = true;
    return;
  }
  std::vector<std::vector<int>> selected;
  for (int rep : plan_->sets[pick])
    selected.push_back(plan_->classes[plan_->class_of_representative[rep]]);
  secretary_.configure(info.n, selected);
}

bool LowDensitySelect::on_reveal(Token t, SessionView& view) {
  if (!plan_->simplified) return chosen_[t.element];
  return secretary_.process(t, view);
}

std::shared_ptr<const ColumnSparsePlan> ColumnSparsePlan::build(
    std::shared_ptr<const LinearMatroid> matrix) {
  if (!matrix) throw InputError("null matrix");
  auto plan = std::make_shared<ColumnSparsePlan>();
  plan->matrix = matrix;
  for (int v = 0; v < matrix->size(); ++v) {
    plan->supports.push_back(matrix->column_support(v));
    plan->loop.push_back(plan->supports.back().empty());
  }
  return plan;
}

ColumnSparseSelect::ColumnSparseSelect(std::shared_ptr<const ColumnSparsePlan> plan)
    : plan_(std::move(plan)) {}

void ColumnSparseSelect::start(const StreamInfo& info, RandomSource& rng) {
  if (info.n != plan_->matrix->size()) throw InputError("stream/matrix size mismatch");
  int rows = plan_->matrix->row_count();
  // Random row order via the enumerable uniform_index primitive.
  std::vector<int> order(rows);
  std::iota(order.begin(), order.end(), 0);
  for (int i = rows - 1; i > 0; --i) std::swap(order[i], order[rng.uniform_index(i + 1)]);
  std::vector<int> position(rows);
  for (int i = 0; i < rows; ++i) position[order[i]] = i;

  // Bucket columns by the first support row in the permuted order.
  std::vector<std::vector<int>> buckets(rows);
  for (int v = 0; v < info.n; ++v) {
    if (plan_->loop[v]) continue;
    int best = rows;
    for (int r : plan_->supports[v]) best = std::min(best, position[r]);
    buckets[best].push_back(v);
  }
  std::vector<std::vector<int>> nonempty;
  for (auto& b : buckets)
    if (!b.empty()) nonempty.push_back(std::move(b));
  secretary_.configure(info.n, nonempty);
}

bool ColumnSparseSelect::on_reveal(Token t, SessionView& view) {
  if (plan_->loop[t.element]) return false;
  return secretary_.process(t, view);
}

}  // namespace matsec
