#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "matsec/errors.hpp"

namespace matsec {

// Bitmask helpers for exhaustive subset work (ground sets up to 64 ids).

inline int popcount(uint64_t mask) { return std::popcount(mask); }

inline uint64_t set_to_mask(std::span<const int> elements) {
  uint64_t mask = 0;
  for (int e : elements) {
    if (e < 0 || e >= 64) throw InputError("element id out of mask range");
    mask |= uint64_t{1} << e;
  }
  return mask;
}

inline std::vector<int> mask_to_set(uint64_t mask) {
  std::vector<int> out;
  out.reserve(static_cast<size_t>(popcount(mask)));
  while (mask) {
    int e = std::countr_zero(mask);
    out.push_back(e);
    mask &= mask - 1;
  }
  return out;
}

// Next k-subset mask in colex order (Gosper's hack); 0 when exhausted.
inline uint64_t next_k_subset(uint64_t mask, int n) {
  if (mask == 0) return 0;
  uint64_t c = mask & -mask;
  uint64_t r = mask + c;
  uint64_t next = (((r ^ mask) >> 2) / c) | r;
  if (n < 64 && next >= (uint64_t{1} << n)) return 0;
  return next;
}

inline uint64_t full_mask(int n) {
  if (n < 0 || n > 64) throw InputError("mask size out of range");
  return n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
}

}  // namespace matsec
