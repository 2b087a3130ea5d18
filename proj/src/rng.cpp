#include "matsec/rng.hpp"

#include <utility>

#include "matsec/errors.hpp"

namespace matsec {

namespace {
constexpr uint64_t kGamma = 0x9E3779B97F4A7C15ull;
}

uint64_t mix64(uint64_t x) {
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ull;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBull;
  x ^= x >> 31;
  return x;
}

uint64_t derive_seed(uint64_t seed, uint64_t tag) { return mix64(seed ^ mix64(tag)); }

uint64_t CounterRng::next_u64() { return mix64(seed_ + (++counter_) * kGamma); }

uint64_t CounterRng::below(uint64_t bound) {
  if (bound == 0) throw InputError("below(0)");
  if (bound == 1) return 0;
  uint64_t threshold = -bound % bound;  // 2^64 mod bound
  for (;;) {
    uint64_t r = next_u64();
    if (r >= threshold) return r % bound;
  }
}

double CounterRng::unit_double() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::vector<int> CounterRng::permutation(int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  for (int i = n - 1; i > 0; --i) {
    int j = static_cast<int>(below(static_cast<uint64_t>(i) + 1));
    std::swap(p[i], p[j]);
  }
  return p;
}

}  // namespace matsec
