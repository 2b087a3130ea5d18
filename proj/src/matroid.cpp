#include "matsec/matroid.hpp"

#include <algorithm>
#include <string>

#include "matsec/errors.hpp"
#include "matsec/smallset.hpp"

namespace matsec {

namespace {
// Rank queries dominate runtime; the cache is bounded so adversarial
// workloads cannot grow it without limit.
constexpr size_t kRankCacheMax = size_t{1} << 22;
}  // namespace

Matroid::Matroid(int n) : n_(n) {
  if (n < 0) throw InputError("negative ground set size");
}

void Matroid::check_ids(std::span<const int> elements) const {
  for (int e : elements)
    if (e < 0 || e >= n_)
      throw InputError("element id " + std::to_string(e) + " out of range [0," +
                       std::to_string(n_) + ")");
}

bool Matroid::independent(std::span<const int> elements) const {
  check_ids(elements);
  queries_.fetch_add(1, std::memory_order_relaxed);
  return independent_impl(elements);
}

bool Matroid::independent(std::initializer_list<int> elements) const {
  return independent(std::span<const int>(elements.begin(), elements.size()));
}

bool Matroid::independent_with(std::span<const int> elements, int extra) const {
  thread_local std::vector<int> buf;
  buf.assign(elements.begin(), elements.end());
  buf.push_back(extra);
  return independent(buf);
}

int Matroid::rank(std::span<const int> elements) const {
  check_ids(elements);
  if (n_ <= 64) return rank_mask(set_to_mask(elements));

  std::vector<int> sorted(elements.begin(), elements.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> basis;
  for (int e : sorted)
    if (independent_with(basis, e)) basis.push_back(e);
  return static_cast<int>(basis.size());
}

int Matroid::rank_mask(uint64_t mask) const {
  if (n_ > 64) throw InputError("rank_mask on ground set larger than 64");
  {
    std::lock_guard<std::mutex> lock(cache_mu_);
    auto it = rank_cache_.find(mask);
    if (it != rank_cache_.end()) return it->second;
  }
  std::vector<int> basis;
  uint64_t rest = mask;
  while (rest) {
    int e = std::countr_zero(rest);
    rest &= rest - 1;
    if (independent_with(basis, e)) basis.push_back(e);
  }
  int r = static_cast<int>(basis.size());
  {
    std::lock_guard<std::mutex> lock(cache_mu_);
    if (rank_cache_.size() < kRankCacheMax) rank_cache_.emplace(mask, r);
  }
  return r;
}

int Matroid::full_rank() const {
  int cached = full_rank_.load(std::memory_order_relaxed);
  if (cached >= 0) return cached;
  int r;
  if (n_ <= 64) {
    r = rank_mask(full_mask(n_));
  } else {
    std::vector<int> all(n_);
    for (int i = 0; i < n_; ++i) all[i] = i;
    r = rank(all);
  }
  full_rank_.store(r, std::memory_order_relaxed);
  return r;
}

bool Matroid::in_span(std::span<const int> elements, int e) const {
  if (e < 0 || e >= n_) throw InputError("element id out of range");
  std::vector<int> with(elements.begin(), elements.end());
  with.push_back(e);
  return rank(with) == rank(elements);
}

std::vector<int> greedy_opt(const Matroid& m, std::span<const int> order) {
  if (static_cast<int>(order.size()) != m.size())
    throw InputError("greedy_opt needs a full permutation of the ground set");
  std::vector<bool> seen(m.size(), false);
  for (int e : order) {
    if (e < 0 || e >= m.size() || seen[e])
      throw InputError("greedy_opt order is not a permutation");
    seen[e] = true;
  }
  std::vector<int> chosen;
  for (int e : order)
    if (m.independent_with(chosen, e)) chosen.push_back(e);
  return chosen;
}

std::vector<int> loops(const Matroid& m) {
  std::vector<int> out;
  for (int e = 0; e < m.size(); ++e) {
    int one[1] = {e};
    if (!m.independent(one)) out.push_back(e);
  }
  return out;
}

std::vector<std::vector<int>> parallel_classes(const Matroid& m) {
  if (!loops(m).empty()) throw InputError("parallel_classes requires a loopless matroid");
  int n = m.size();
  std::vector<int> cls(n, -1);
  std::vector<std::vector<int>> classes;
  for (int e = 0; e < n; ++e) {
    if (cls[e] >= 0) continue;
    cls[e] = static_cast<int>(classes.size());
    classes.push_back({e});
    for (int f = e + 1; f < n; ++f) {
      if (cls[f] >= 0) continue;
      int pair[2] = {e, f};
      if (m.rank(pair) == 1) {
        cls[f] = cls[e];
        classes[cls[e]].push_back(f);
      }
    }
  }
  // The relation must come out transitive: every pair inside a class is
  // parallel, every cross pair is not.
  for (const auto& c : classes)
    for (size_t i = 0; i < c.size(); ++i)
      for (size_t j = i + 1; j < c.size(); ++j) {
        int pair[2] = {c[i], c[j]};
        if (m.rank(pair) != 1)
          throw InternalCheckError("parallelism is not transitive on this oracle");
      }
  return classes;
}

std::vector<int> rank_profile(const Matroid& m, std::span<const int> order) {
  std::vector<int> profile;
  profile.reserve(order.size());
  std::vector<int> basis;
  for (int e : order) {
    if (m.independent_with(basis, e)) basis.push_back(e);
    profile.push_back(static_cast<int>(basis.size()));
  }
  return profile;
}

bool dual_independent(const Matroid& m, uint64_t mask) {
  uint64_t rest = full_mask(m.size()) & ~mask;
  return m.rank_mask(rest) == m.full_rank();
}

int min_cocircuit_size(const Matroid& m, int e) {
  int n = m.size();
  if (e < 0 || e >= n) throw InputError("element id out of range");
  if (n > 24)
    throw BoundError("exhaustive cocircuit search is gated to n <= 24 (n = " +
                     std::to_string(n) + ")");
  {
    int one[1] = {e};
    if (!m.independent(one)) throw InputError("min_cocircuit_size on a loop");
  }
  uint64_t bit = uint64_t{1} << e;
  for (int s = 1; s <= n; ++s) {
    // Candidates of size s containing e: choose s-1 among the others.
    uint64_t others = full_mask(n) & ~bit;
    if (s == 1) {
      if (!dual_independent(m, bit)) return 1;
      continue;
    }
    std::vector<int> rest = mask_to_set(others);
    // Iterate (s-1)-subsets of rest via Gosper on the compacted index space.
    int k = static_cast<int>(rest.size());
    uint64_t sub = (uint64_t{1} << (s - 1)) - 1;
    while (sub) {
      uint64_t candidate = bit;
      uint64_t t = sub;
      while (t) {
        int idx = std::countr_zero(t);
        t &= t - 1;
        candidate |= uint64_t{1} << rest[idx];
      }
      if (!dual_independent(m, candidate)) {
        bool minimal = true;
        uint64_t walk = candidate;
        while (walk && minimal) {
          int f = std::countr_zero(walk);
          walk &= walk - 1;
          if (!dual_independent(m, candidate & ~(uint64_t{1} << f))) minimal = false;
        }
        if (minimal) return s;
      }
      sub = next_k_subset(sub, k);
    }
  }
  throw InternalCheckError("no cocircuit contains a non-coloop element");
}

int c_star(const Matroid& m) {
  if (m.size() == 0) throw InputError("c_star of an empty matroid");
  int best = 0;
  for (int e = 0; e < m.size(); ++e) best = std::max(best, min_cocircuit_size(m, e));
  return best;
}

RankTable RankTable::build(const Matroid& m, int bound) {
  int n = m.size();
  if (n > bound || n > 63)
    throw BoundError("subset enumeration over n = " + std::to_string(n) +
                     " exceeds the bound " + std::to_string(std::min(bound, 63)));
  RankTable t;
  t.n = n;
  size_t total = size_t{1} << n;
  t.rank.assign(total, 0);
  t.basis.assign(total, 0);
  thread_local std::vector<int> buf;
  for (uint64_t mask = 1; mask < total; ++mask) {
    int e = std::countr_zero(mask);
    uint64_t prev = mask & (mask - 1);
    uint64_t b = t.basis[prev];
    buf = mask_to_set(b);
    buf.push_back(e);
    if (m.independent(buf)) {
      t.basis[mask] = b | (uint64_t{1} << e);
      t.rank[mask] = static_cast<uint8_t>(t.rank[prev] + 1);
    } else {
      t.basis[mask] = b;
      t.rank[mask] = t.rank[prev];
    }
  }
  return t;
}

}  // namespace matsec
