#pragma once

#include <cstdint>
#include <vector>

namespace matsec {

// Counter-based generator: output i of a stream with seed s is
// mix64(s + i * GAMMA), the SplitMix64 finalizer over a Weyl sequence.
// Stream splitting is by seed derivation, derive(s, tag) = mix64(s ^ mix64(tag)),
// so sigma/pi/tau/algorithm draws and per-trial streams are all independent
// substreams of one 64-bit master seed. Everything here is defined in terms
// of exact integer operations, so runs are bit-reproducible across platforms
// and across worker counts.
uint64_t mix64(uint64_t x);
uint64_t derive_seed(uint64_t seed, uint64_t tag);

class CounterRng {
 public:
  explicit CounterRng(uint64_t seed) : seed_(seed) {}

  uint64_t next_u64();

  // Uniform in {0, ..., bound-1} by rejection (no modulo bias).
  uint64_t below(uint64_t bound);

  // 53-bit mantissa uniform in [0, 1).
  double unit_double();

  bool bernoulli(double p) { return unit_double() < p; }

  // Fisher-Yates; identity array shuffled in place.
  std::vector<int> permutation(int n);

  CounterRng fork(uint64_t tag) const { return CounterRng(derive_seed(seed_, tag)); }

  uint64_t seed() const { return seed_; }

 private:
  uint64_t seed_;
  uint64_t counter_ = 0;
};

}  // namespace matsec
