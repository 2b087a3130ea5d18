#pragma once

#include <vector>

#include "matsec/matroid.hpp"
#include "matsec/multigraph.hpp"
#include "matsec/rational.hpp"

namespace matsec {

// |X| <= r.
class UniformMatroid final : public Matroid {
 public:
  UniformMatroid(int n, int r);
  int uniform_rank() const { return r_; }

 protected:
  bool independent_impl(std::span<const int> elements) const override;

 private:
  int r_;
};

// At most cap_i elements from part i; parts partition the ground set.
class PartitionMatroid final : public Matroid {
 public:
  PartitionMatroid(std::vector<std::vector<int>> parts, std::vector<int> capacities);

  const std::vector<std::vector<int>>& parts() const { return parts_; }
  const std::vector<int>& capacities() const { return caps_; }
  int part_of(int e) const { return part_of_[e]; }

 protected:
  bool independent_impl(std::span<const int> elements) const override;

 private:
  std::vector<std::vector<int>> parts_;
  std::vector<int> caps_;
  std::vector<int> part_of_;
};

// Edges of a multigraph; independent = forest. Self-loops are loops.
class GraphicMatroid final : public Matroid {
 public:
  explicit GraphicMatroid(Multigraph g);
  const Multigraph& graph() const { return g_; }

 protected:
  bool independent_impl(std::span<const int> elements) const override;

 private:
  Multigraph g_;
};

// Dual of the graphic matroid: X independent iff E \ X still spans every
// component, i.e. X contains no edge cut. Bridges are loops here and
// self-loops of the graph are coloops.
class CographicMatroid final : public Matroid {
 public:
  explicit CographicMatroid(Multigraph g);
  const Multigraph& graph() const { return g_; }

 protected:
  bool independent_impl(std::span<const int> elements) const override;

 private:
  Multigraph g_;
  int graphic_rank_;
};

// Columns of an exact rational matrix; independence = linear independence,
// decided by fraction-free elimination over Q (or a bitset path over GF(2)
// when constructed with gf2 = true and all entries are 0/1).
class LinearMatroid final : public Matroid {
 public:
  LinearMatroid(std::vector<std::vector<Rat>> rows, bool gf2 = false);

  int row_count() const { return static_cast<int>(rows_.size()); }
  const std::vector<std::vector<Rat>>& rows() const { return rows_; }
  bool gf2() const { return gf2_; }

  // Max number of nonzero entries in any column (0 for an empty matrix).
  int column_sparsity() const;

  // Row indices with nonzero entry in column v.
  std::vector<int> column_support(int v) const;

 protected:
  bool independent_impl(std::span<const int> elements) const override;

 private:
  std::vector<std::vector<Rat>> rows_;
  bool gf2_;
  std::vector<uint64_t> gf2_columns_;  // bit r set when rows_[r][v] != 0
};

MatroidPtr free_matroid(int n);

}  // namespace matsec
