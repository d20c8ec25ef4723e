#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace stonework {

/// A subset of a carrier of at most 32 elements, one bit per element index.
using Mask = std::uint32_t;

inline constexpr int kMaxElements = 32;

inline constexpr Mask bit(int i) { return Mask{1} << i; }

inline constexpr Mask full_mask(int n) {
  return n >= 32 ? ~Mask{0} : (bit(n) - 1);
}

inline constexpr bool has(Mask m, int i) { return (m >> i) & 1u; }

inline constexpr bool subset_of(Mask a, Mask b) { return (a & ~b) == 0; }

inline int popcount(Mask m) { return std::popcount(m); }

inline int lowest(Mask m) { return std::countr_zero(m); }

/// Calls f(i) for every set bit i of m, lowest first.
template <class F>
inline void for_each_bit(Mask m, F&& f) {
  while (m) {
    f(std::countr_zero(m));
    m &= m - 1;
  }
}

inline std::vector<int> bits_of(Mask m) {
  std::vector<int> out;
  for_each_bit(m, [&](int i) { out.push_back(i); });
  return out;
}

inline Mask mask_of(const std::vector<int>& xs) {
  Mask m = 0;
  for (int x : xs) m |= bit(x);
  return m;
}

}  // namespace stonework
