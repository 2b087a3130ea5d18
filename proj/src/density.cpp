#include "matsec/density.hpp"

#include <algorithm>
#include <string>

#include "matsec/errors.hpp"
#include "matsec/families.hpp"
#include "matsec/smallset.hpp"

namespace matsec {

namespace {

void require_loopless(const Matroid& m, const char* what) {
  auto ls = loops(m);
  if (!ls.empty())
    throw InputError(std::string(what) + " requires a loopless matroid (" +
                     std::to_string(ls.size()) + " loops present)");
  if (m.size() == 0) throw InputError(std::string(what) + " of an empty matroid");
}

// For a uniform matroid the ratio |X|/min(|X|, r) is maximized by the full
// ground set; for a partition matroid the mediant inequality reduces the
// maximum to the densest single part.
Density uniform_density(const UniformMatroid& m) {
  Density d;
  d.value = make_rat(m.size(), m.uniform_rank());
  d.witness = mask_to_set(full_mask(m.size()));
  return d;
}

Density partition_density(const PartitionMatroid& m) {
  Rat best(0);
  for (size_t i = 0; i < m.parts().size(); ++i) {
    int sz = static_cast<int>(m.parts()[i].size());
    if (sz == 0) continue;
    Rat ratio = make_rat(sz, std::min(m.capacities()[i], sz));
    if (ratio > best) best = ratio;
  }
  Density d;
  d.value = best;
  for (size_t i = 0; i < m.parts().size(); ++i) {
    int sz = static_cast<int>(m.parts()[i].size());
    if (sz == 0) continue;
    if (make_rat(sz, std::min(m.capacities()[i], sz)) == best)
      d.witness.insert(d.witness.end(), m.parts()[i].begin(), m.parts()[i].end());
  }
  std::sort(d.witness.begin(), d.witness.end());
  return d;
}

}  // namespace

Density density(const Matroid& m, const EnumerationOptions& opts) {
  require_loopless(m, "density");
  if (auto* u = dynamic_cast<const UniformMatroid*>(&m)) return uniform_density(*u);
  if (auto* p = dynamic_cast<const PartitionMatroid*>(&m)) return partition_density(*p);

  RankTable table = RankTable::build(m, opts.bound);
  int n = m.size();
  uint64_t all = full_mask(n);
  Rat best(0);
  for (uint64_t mask = 1; mask <= all; ++mask) {
    Rat ratio = make_rat(popcount(mask), table.rank[mask]);
    if (ratio > best) best = ratio;
  }
  // Densest sets are closed under union, so the maximal witness is the
  // union of all maximizers; verified below.
  uint64_t witness = 0;
  for (uint64_t mask = 1; mask <= all; ++mask)
    if (make_rat(popcount(mask), table.rank[mask]) == best) witness |= mask;
  if (make_rat(popcount(witness), table.rank[witness]) != best)
    throw InternalCheckError("union of densest sets is not densest");

  Density d;
  d.value = best;
  d.witness = mask_to_set(witness);
  return d;
}

bool is_uniformly_dense(const Matroid& m, const EnumerationOptions& opts) {
  Density d = density(m, opts);
  return d.value == make_rat(m.size(), m.full_rank());
}

}  // namespace matsec
