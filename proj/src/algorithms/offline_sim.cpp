#include "matsec/algorithms/offline_sim.hpp"

#include <algorithm>
#include <numeric>

#include "matsec/errors.hpp"

namespace matsec {

OfflineSimResult offline_threshold_simulation(const Matroid& m, int rank,
                                              const std::vector<double>& sorted_weights,
                                              const Prob& p, CounterRng& rng) {
  int n = static_cast<int>(sorted_weights.size());
  if (n != m.size()) throw InputError("need exactly one weight per element");
  double pd = p.approx();

  std::vector<double> arrival_time(n);
  for (int i = 0; i < n; ++i) arrival_time[i] = rng.unit_double();
  std::vector<int> by_time(n);
  std::iota(by_time.begin(), by_time.end(), 0);
  std::sort(by_time.begin(), by_time.end(),
            [&](int a, int b) { return arrival_time[a] < arrival_time[b]; });

  // T-process over weight indices (lower index = heavier; dummies are
  // implicit while |T| < rank). Candidates are marked, not yet accepted.
  std::vector<std::pair<int, bool>> top;  // (weight index, sampled)
  std::vector<int> candidates;            // weight indices in time order
  for (int w : by_time) {
    bool sampled = arrival_time[w] < pd;
    bool enters, evicted_ok;
    if (static_cast<int>(top.size()) < rank) {
      enters = true;
      evicted_ok = true;
      top.emplace_back(w, sampled);
    } else {
      auto lightest = std::max_element(top.begin(), top.end());  // largest index
      enters = w < lightest->first;
      evicted_ok = enters && lightest->second;
      if (enters) *lightest = {w, sampled};
    }
    if (!sampled && enters && evicted_ok) candidates.push_back(w);
  }
  if (static_cast<int>(candidates.size()) > rank)
    throw InternalCheckError("offline simulation marked more candidates than the rank");

  // Assign distinct elements uniformly, then greedy in time order.
  std::vector<int> elements = rng.permutation(n);
  OfflineSimResult out;
  out.candidate_count = static_cast<int>(candidates.size());
  std::vector<int> chosen;
  for (size_t i = 0; i < candidates.size(); ++i) {
    int elem = elements[i];
    if (m.independent_with(chosen, elem)) {
      chosen.push_back(elem);
      out.accepted_weight_indices.push_back(candidates[i]);
      out.accepted_elements.push_back(elem);
    }
  }
  return out;
}

}  // namespace matsec
