#include "matsec/families.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "matsec/errors.hpp"

namespace matsec {

UniformMatroid::UniformMatroid(int n, int r) : Matroid(n), r_(r) {
  if (r < 0 || r > n) throw InputError("uniform matroid needs 0 <= r <= n");
}

bool UniformMatroid::independent_impl(std::span<const int> elements) const {
  return static_cast<int>(elements.size()) <= r_;
}

PartitionMatroid::PartitionMatroid(std::vector<std::vector<int>> parts,
                                   std::vector<int> capacities)
    : Matroid([&parts] {
        int n = 0;
        for (const auto& p : parts) n += static_cast<int>(p.size());
        return n;
      }()),
      parts_(std::move(parts)),
      caps_(std::move(capacities)) {
  if (parts_.size() != caps_.size())
    throw InputError("partition matroid: one capacity per part required");
  part_of_.assign(size(), -1);
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (caps_[i] < 0) throw InputError("negative capacity");
    for (int e : parts_[i]) {
      if (e < 0 || e >= size() || part_of_[e] >= 0)
        throw InputError("parts must partition {0..n-1}");
      part_of_[e] = static_cast<int>(i);
    }
  }
}

bool PartitionMatroid::independent_impl(std::span<const int> elements) const {
  thread_local std::vector<int> used;
  used.assign(parts_.size(), 0);
  for (int e : elements)
    if (++used[part_of_[e]] > caps_[part_of_[e]]) return false;
  return true;
}

GraphicMatroid::GraphicMatroid(Multigraph g) : Matroid(g.edge_count()), g_(std::move(g)) {}

bool GraphicMatroid::independent_impl(std::span<const int> elements) const {
  thread_local std::vector<int> parent;
  parent.assign(g_.vertices, -1);
  auto find = [&](int x) {
    while (parent[x] >= 0) {
      if (parent[parent[x]] >= 0) parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (int e : elements) {
    auto [u, v] = g_.edges[e];
    if (u == v) return false;
    int ru = find(u), rv = find(v);
    if (ru == rv) return false;
    parent[ru] = rv;
  }
  return true;
}

CographicMatroid::CographicMatroid(Multigraph g)
    : Matroid(g.edge_count()), g_(std::move(g)), graphic_rank_(graphic_rank(g_)) {}

bool CographicMatroid::independent_impl(std::span<const int> elements) const {
  thread_local std::vector<int> removed;
  removed.assign(elements.begin(), elements.end());
  Multigraph const& g = g_;
  int comps_with_removed = component_count(g, removed);
  return g.vertices - comps_with_removed == graphic_rank_;
}

LinearMatroid::LinearMatroid(std::vector<std::vector<Rat>> rows, bool gf2)
    : Matroid(rows.empty() ? 0 : static_cast<int>(rows[0].size())),
      rows_(std::move(rows)),
      gf2_(gf2) {
  for (const auto& row : rows_)
    if (static_cast<int>(row.size()) != size())
      throw InputError("ragged matrix rows");
  if (gf2_) {
    if (rows_.size() > 64) throw InputError("GF(2) fast path supports at most 64 rows");
    for (const auto& row : rows_)
      for (const auto& v : row)
        if (v != 0 && v != 1)
          throw InputError("GF(2) fast path requires all entries in {0,1}");
    gf2_columns_.assign(size(), 0);
    for (size_t r = 0; r < rows_.size(); ++r)
      for (int v = 0; v < size(); ++v)
        if (rows_[r][v] != 0) gf2_columns_[v] |= uint64_t{1} << r;
  }
}

int LinearMatroid::column_sparsity() const {
  int best = 0;
  for (int v = 0; v < size(); ++v) {
    int nz = 0;
    for (const auto& row : rows_)
      if (row[v] != 0) ++nz;
    best = std::max(best, nz);
  }
  return best;
}

std::vector<int> LinearMatroid::column_support(int v) const {
  if (v < 0 || v >= size()) throw InputError("column index out of range");
  std::vector<int> support;
  for (size_t r = 0; r < rows_.size(); ++r)
    if (rows_[r][v] != 0) support.push_back(static_cast<int>(r));
  return support;
}

bool LinearMatroid::independent_impl(std::span<const int> elements) const {
  size_t k = elements.size();
  if (k == 0) return true;
  if (k > rows_.size()) return false;

  if (gf2_) {
    // Incremental elimination over GF(2) with one word per column.
    std::vector<uint64_t> pivots;
    for (int v : elements) {
      uint64_t col = gf2_columns_[v];
      for (uint64_t p : pivots) {
        uint64_t low = p & -p;
        if (col & low) col ^= p;
      }
      if (col == 0) return false;
      pivots.push_back(col);
    }
    return true;
  }

  // Exact Gaussian elimination over Q on the selected columns.
  size_t nrows = rows_.size();
  std::vector<std::vector<Rat>> a(nrows, std::vector<Rat>(k));
  for (size_t r = 0; r < nrows; ++r)
    for (size_t j = 0; j < k; ++j) a[r][j] = rows_[r][elements[j]];

  size_t row = 0;
  for (size_t col = 0; col < k; ++col) {
    size_t pivot = row;
    while (pivot < nrows && a[pivot][col] == 0) ++pivot;
    if (pivot == nrows) return false;  // rank deficit
    std::swap(a[pivot], a[row]);
    Rat inv = a[row][col];
    for (size_t r = row + 1; r < nrows; ++r) {
      if (a[r][col] == 0) continue;
      Rat factor = a[r][col] / inv;
      for (size_t j = col; j < k; ++j) a[r][j] -= factor * a[row][j];
    }
    ++row;
  }
  return true;
}

MatroidPtr free_matroid(int n) { return std::make_shared<UniformMatroid>(n, n); }

}  // namespace matsec
