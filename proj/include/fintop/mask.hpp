#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace fintop {

// A subset of the points 0..n-1, stored as a characteristic bit vector.
using Mask = std::uint64_t;

// Explicit open-set families are materialized for spaces of at most this
// many points (worst case 2^n members).
inline constexpr int kMaxPoints = 12;

// Full enumeration sweeps stop here.
inline constexpr int kMaxEnumerationPoints = 6;

constexpr Mask full_mask(int n) {
  return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

constexpr Mask singleton_mask(int x) { return Mask{1} << x; }

constexpr bool mask_contains(Mask m, int x) { return (m >> x) & 1; }

constexpr bool mask_subset(Mask a, Mask b) { return (a & ~b) == 0; }

constexpr int mask_size(Mask m) { return std::popcount(m); }

inline std::vector<int> mask_points(Mask m) {
  std::vector<int> out;
  for (Mask t = m; t != 0; t &= t - 1) out.push_back(std::countr_zero(t));
  return out;
}

inline Mask mask_of_points(const std::vector<int>& pts) {
  Mask m = 0;
  for (int p : pts) m |= singleton_mask(p);
  return m;
}

inline std::string mask_to_string(Mask m) {
  std::string s = "{";
  bool first = true;
  for (Mask t = m; t != 0; t &= t - 1) {
    if (!first) s += ",";
    s += std::to_string(std::countr_zero(t));
    first = false;
  }
  return s + "}";
}

// Visits every subset of `m`, the empty set included.
template <typename Fn>
void for_each_subset(Mask m, Fn&& fn) {
  Mask s = m;
  while (true) {
    fn(s);
    if (s == 0) break;
    s = (s - 1) & m;
  }
}

}  // namespace fintop
