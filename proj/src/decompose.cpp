#include "matsec/decompose.hpp"

#include <algorithm>
#include <map>

#include "matsec/cover.hpp"
#include "matsec/errors.hpp"

namespace matsec {

namespace {

// b parallel copies of every element of the base matroid: a set is
// independent when it holds at most one copy of each element and the
// underlying elements are independent in the base.
class ReplicaMatroid final : public Matroid {
 public:
  ReplicaMatroid(const Matroid& base, int copies)
      : Matroid(base.size() * copies), base_(base), copies_(copies) {}

  int underlying(int replica_id) const { return replica_id / copies_; }

 protected:
  bool independent_impl(std::span<const int> elements) const override {
    std::vector<int> originals;
    originals.reserve(elements.size());
    for (int e : elements) originals.push_back(underlying(e));
    std::sort(originals.begin(), originals.end());
    if (std::adjacent_find(originals.begin(), originals.end()) != originals.end())
      return false;
    return base_.independent(originals);
  }

 private:
  const Matroid& base_;
  int copies_;
};

}  // namespace

ConvexDecomposition convex_decomposition(MatroidPtr m, const EnumerationOptions& opts) {
  if (!m) throw InputError("convex decomposition of a null matroid");
  Density d = density(*m, opts);
  long a = d.value.get_num().get_si();
  long b = d.value.get_den().get_si();
  int n = m->size();

  ReplicaMatroid replica(*m, static_cast<int>(b));
  PartitionCover cover = partition_cover(replica, static_cast<int>(a));
  if (!cover.feasible)
    throw InternalCheckError("replication cover infeasible at the matroid's own density");

  // Map parts down to base elements and prune surplus: every element must
  // end up in exactly b of the a sets.
  std::vector<std::vector<bool>> member(a, std::vector<bool>(n, false));
  std::vector<int> occurrences(n, 0);
  for (long j = 0; j < a; ++j)
    for (int rep : cover.parts[j]) {
      int e = replica.underlying(rep);
      member[j][e] = true;  // distinct copies land in distinct parts
      ++occurrences[e];
    }
  for (int e = 0; e < n; ++e) {
    if (occurrences[e] < b)
      throw InternalCheckError("replication cover misses copies of an element");
    for (long j = a - 1; j >= 0 && occurrences[e] > b; --j)
      if (member[j][e]) {
        member[j][e] = false;
        --occurrences[e];
      }
  }

  std::map<std::vector<int>, Rat> merged;
  Rat unit = make_rat(1, a);
  for (long j = 0; j < a; ++j) {
    std::vector<int> set;
    for (int e = 0; e < n; ++e)
      if (member[j][e]) set.push_back(e);
    merged[set] += unit;
  }

  ConvexDecomposition out;
  out.gamma = d.value;
  Rat coeff_sum(0);
  std::vector<Rat> coordinate(n, Rat(0));
  for (auto& [set, coeff] : merged) {
    if (!m->independent(set))
      throw InternalCheckError("decomposition term is not independent");
    coeff_sum += coeff;
    for (int e : set) coordinate[e] += coeff;
    out.terms.emplace_back(set, coeff);
  }
  if (coeff_sum != 1) throw InternalCheckError("decomposition coefficients do not sum to 1");
  Rat target = 1 / d.value;
  for (int e = 0; e < n; ++e)
    if (coordinate[e] != target)
      throw InternalCheckError("decomposition coordinate differs from 1/gamma");
  return out;
}

}  // namespace matsec
