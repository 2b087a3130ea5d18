#pragma once

#include <array>
#include <memory>
#include <vector>

#include "matsec/algorithms/classical.hpp"
#include "matsec/decompose.hpp"
#include "matsec/families.hpp"
#include "matsec/multigraph.hpp"
#include "matsec/online.hpp"

namespace matsec {

// Static structure for the cographic algorithm: bridges are loops of the
// cographic matroid (always rejected), self-loops of the graph are coloops
// (always accepted). Each 2-edge-connected piece is series-contracted to a
// 3-edge-connected graph whose cographic matroid gets a three-cobase cover;
// contracted edges stand for the parallel classes of the cographic matroid.
struct CographicPlan {
  Multigraph graph;
  std::shared_ptr<const CographicMatroid> target;
  std::vector<bool> bridge;
  std::vector<bool> self_loop;
  struct Piece {
    std::vector<std::vector<int>> classes;  // parallel classes, original edge ids
    std::array<std::vector<int>, 3> cobase_classes;  // class indices per cobase
  };
  std::vector<Piece> pieces;
  // Cobases of the uncontracted graph, present when it is 3-edge-connected
  // (what the pure three-cobase rule needs).
  std::array<std::vector<int>, 3> pure_cobases;
  bool three_edge_connected = false;

  static std::shared_ptr<const CographicPlan> build(const Multigraph& g);
};

// Per piece, pick one of the three cobases uniformly and run the per-class
// secretary on the parallel classes it represents (pure = false), or
// accept a uniformly chosen cobase outright, which requires the graph
// itself to be 3-edge-connected (pure = true).
class CographicCover final : public OnlineAlgorithm {
 public:
  CographicCover(std::shared_ptr<const CographicPlan> plan, bool pure);

  void start(const StreamInfo& info, RandomSource& rng) override;
  bool on_reveal(Token t, SessionView& view) override;

 private:
  std::shared_ptr<const CographicPlan> plan_;
  bool pure_;
  std::vector<bool> pure_accept_;  // pure mode: chosen cobase membership
  ClassSecretary secretary_;       // full mode
};

// Weight-blind selection from the convex decomposition of the matroid
// polytope point (1/gamma) * 1. Plain mode draws an independent set with
// the decomposition probabilities and accepts exactly its elements.
// Simplified mode decomposes the simplification (one element per parallel
// class) and runs the per-class secretary on the classes whose
// representative was drawn.
struct LowDensityPlan {
  MatroidPtr matroid;
  bool simplified = false;
  std::vector<std::vector<int>> sets;  // decomposition supports, element ids
  std::vector<Rat> coefficients;
  Rat gamma;
  std::vector<std::vector<int>> classes;  // simplified mode: parallel classes
  std::vector<int> class_of_representative;

  static std::shared_ptr<const LowDensityPlan> build(MatroidPtr m, bool simplified,
                                                     const EnumerationOptions& opts = {});
};

class LowDensitySelect final : public OnlineAlgorithm {
 public:
  explicit LowDensitySelect(std::shared_ptr<const LowDensityPlan> plan);

  void start(const StreamInfo& info, RandomSource& rng) override;
  bool on_reveal(Token t, SessionView& view) override;

 private:
  std::shared_ptr<const LowDensityPlan> plan_;
  std::vector<bool> chosen_;
  ClassSecretary secretary_;
};

// Column-sparse linear matroids: permute the rows at random, bucket each
// nonzero column by its first support row in the permuted order, then run
// the per-class secretary accepting at most one column per bucket. The
// output is independent because each bucket's defining row meets the
// accepted set in exactly one column.
struct ColumnSparsePlan {
  std::shared_ptr<const LinearMatroid> matrix;
  std::vector<std::vector<int>> supports;  // column -> row support
  std::vector<bool> loop;                  // zero columns

  static std::shared_ptr<const ColumnSparsePlan> build(
      std::shared_ptr<const LinearMatroid> matrix);
};

class ColumnSparseSelect final : public OnlineAlgorithm {
 public:
  explicit ColumnSparseSelect(std::shared_ptr<const ColumnSparsePlan> plan);

  void start(const StreamInfo& info, RandomSource& rng) override;
  bool on_reveal(Token t, SessionView& view) override;

 private:
  std::shared_ptr<const ColumnSparsePlan> plan_;
  ClassSecretary secretary_;
};

}  // namespace matsec
