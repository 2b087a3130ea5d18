#include "matsec/principal.hpp"

#include <algorithm>
#include <string>

#include "matsec/errors.hpp"
#include "matsec/smallset.hpp"

namespace matsec {

SurplusMinimizers rank_surplus_minimizers(const Matroid& m, const Rat& lambda,
                                          const EnumerationOptions& opts) {
  RankTable table = RankTable::build(m, opts.bound);
  uint64_t all = full_mask(m.size());
  // Forced to Rat: returning the gmpxx expression template would dangle.
  auto value_of = [&](uint64_t mask) -> Rat {
    return lambda * table.rank[mask] - popcount(mask);
  };

  Rat best = 0;  // g(empty) = 0
  for (uint64_t mask = 1; mask <= all; ++mask) {
    Rat g = value_of(mask);
    if (g < best) best = g;
  }
  uint64_t meet = all;
  uint64_t join = 0;
  uint64_t count = 0;
  for (uint64_t mask = 0; mask <= all; ++mask) {
    if (value_of(mask) == best) {
      meet &= mask;
      join |= mask;
      ++count;
    }
  }
  if (value_of(meet) != best || value_of(join) != best)
    throw InternalCheckError("surplus minimizers do not form a lattice");

  SurplusMinimizers out;
  out.min_value = best;
  out.minimal = mask_to_set(meet & all);
  out.maximal = mask_to_set(join);
  out.minimizer_count = count;
  return out;
}

PrincipalSequence principal_sequence(MatroidPtr m, const EnumerationOptions& opts) {
  if (!m) throw InputError("principal sequence of a null matroid");
  if (!loops(*m).empty())
    throw InputError("principal sequence requires a loopless matroid");
  if (m->size() == 0) throw InputError("principal sequence of an empty matroid");

  PrincipalSequence seq;
  std::vector<int> contracted;  // F_{i-1} in base ids
  std::vector<int> remaining;
  for (int e = 0; e < m->size(); ++e) remaining.push_back(e);

  while (!remaining.empty()) {
    auto current = make_minor(m, contracted, remaining);
    Density d = density(*current, opts);

    std::vector<int> step_base;  // E_i in base ids
    step_base.reserve(d.witness.size());
    for (int local : d.witness) step_base.push_back(current->to_base(local));
    std::sort(step_base.begin(), step_base.end());

    auto minor = make_minor(m, contracted, step_base);
    int r_i = minor->full_rank();
    if (make_rat(static_cast<int>(step_base.size()), r_i) != d.value)
      throw InternalCheckError("principal minor density disagrees with step density");

    if (!seq.critical_values.empty() && !(d.value < seq.critical_values.back()))
      throw InternalCheckError("critical values are not strictly decreasing");
    if (d.value < 1)
      throw InternalCheckError("critical value below 1 on a loopless matroid");

    contracted.insert(contracted.end(), step_base.begin(), step_base.end());
    std::sort(contracted.begin(), contracted.end());
    seq.nested_sets.push_back(contracted);
    seq.critical_values.push_back(d.value);
    seq.minors.push_back(minor);
    seq.step_ground_sets.push_back(step_base);
    seq.step_ranks.push_back(r_i);

    std::vector<int> rest;
    for (int e : remaining)
      if (!std::binary_search(step_base.begin(), step_base.end(), e)) rest.push_back(e);
    remaining = std::move(rest);
  }

  int total_rank = 0;
  for (int r : seq.step_ranks) total_rank += r;
  if (total_rank != m->full_rank())
    throw InternalCheckError("step ranks do not sum to the matroid rank");
  return seq;
}

std::vector<std::shared_ptr<const MinorView>> principal_minors(
    MatroidPtr m, const EnumerationOptions& opts) {
  PrincipalSequence seq = principal_sequence(m, opts);
  for (int i = 0; i < seq.steps(); ++i) {
    if (!is_uniformly_dense(*seq.minors[i], opts))
      throw InternalCheckError("principal minor " + std::to_string(i) +
                               " is not uniformly dense");
    Density d = density(*seq.minors[i], opts);
    if (d.value != seq.critical_values[i])
      throw InternalCheckError("principal minor density differs from its critical value");
  }
  return seq.minors;
}

}  // namespace matsec
