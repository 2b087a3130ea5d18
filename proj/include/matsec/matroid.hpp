#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <unordered_map>
#include <vector>

namespace matsec {

// Independence-oracle view of a matroid on ground set {0, ..., n-1}.
// Everything else (rank, span, minors, duals) is derived from the oracle.
// Instances are immutable after construction and shareable across threads;
// the rank cache is internally synchronized.
class Matroid {
 public:
  explicit Matroid(int n);
  virtual ~Matroid() = default;

  Matroid(const Matroid&) = delete;
  Matroid& operator=(const Matroid&) = delete;

  int size() const { return n_; }

  // Elements must be distinct ids in [0, n). Counts as one oracle query.
  bool independent(std::span<const int> elements) const;
  bool independent(std::initializer_list<int> elements) const;

  // independent(elements + {extra}) without building the union at the caller.
  bool independent_with(std::span<const int> elements, int extra) const;

  // Size of a maximal independent subset, computed by greedy over the
  // canonical ascending-id order (the result is order-independent).
  // Memoized per oracle in a bounded, mutex-guarded cache when n <= 64.
  int rank(std::span<const int> elements) const;
  int rank_mask(uint64_t mask) const;  // n <= 64
  int full_rank() const;

  // r(x + e) == r(x)?
  bool in_span(std::span<const int> elements, int e) const;

  // Total independence queries answered (no contract, observability only).
  uint64_t query_count() const { return queries_.load(std::memory_order_relaxed); }

 protected:
  virtual bool independent_impl(std::span<const int> elements) const = 0;

 private:
  void check_ids(std::span<const int> elements) const;

  int n_;
  mutable std::atomic<uint64_t> queries_{0};
  mutable std::mutex cache_mu_;
  mutable std::unordered_map<uint64_t, int> rank_cache_;
  mutable std::atomic<int> full_rank_{-1};
};

using MatroidPtr = std::shared_ptr<const Matroid>;

// Greedy scan in the given order, keeping every element that preserves
// independence. The result is a basis; for the order induced by any
// weight ranking it is a maximum-weight independent set.
std::vector<int> greedy_opt(const Matroid& m, std::span<const int> order);

// Elements e with {e} dependent.
std::vector<int> loops(const Matroid& m);

// Equivalence classes of e ~ f <=> e == f or r({e,f}) == 1.
// Requires a loopless matroid; transitivity is verified on the output.
std::vector<std::vector<int>> parallel_classes(const Matroid& m);

// Prefix ranks r(A_1), ..., r(A_n) along the given order; nondecreasing
// with unit steps.
std::vector<int> rank_profile(const Matroid& m, std::span<const int> order);

// X is independent in the dual iff r(E \ X) == r(E).
bool dual_independent(const Matroid& m, uint64_t mask);

// Size of the smallest cocircuit (dual circuit) containing e, found by
// exhaustive search over subsets in increasing size: O(2^n) dual-rank
// probes in the worst case, gated to n <= 24. Requires loopless input.
int min_cocircuit_size(const Matroid& m, int e);

// max_e min_cocircuit_size(e).
int c_star(const Matroid& m);

// Ranks (and greedy bases) of every subset of the ground set, built with
// one oracle call per mask. The workhorse behind density, critical-value
// minimization and exact rank profiles.
struct RankTable {
  int n = 0;
  std::vector<uint8_t> rank;
  std::vector<uint64_t> basis;

  static RankTable build(const Matroid& m, int bound);
};

}  // namespace matsec
