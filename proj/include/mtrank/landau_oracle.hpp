#pragma once

// Exhaustive partition enumeration for g(n) and g1(n). Shares nothing with
// the knapsack in landau.hpp so the two can be cross-checked.

#include "mtrank/bignum.hpp"

#include <cstddef>
#include <functional>
#include <vector>

namespace mtrank::oracle {

/// Calls visit(parts) for every partition of n into positive parts,
/// parts listed in nonincreasing order.
inline void for_each_partition(std::size_t n,
                               const std::function<void(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> parts;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t remaining, std::size_t cap) {
    if (remaining == 0) {
      visit(parts);
      return;
    }
    for (std::size_t part = std::min(remaining, cap); part >= 1; --part) {
      parts.push_back(part);
      rec(remaining - part, part);
      parts.pop_back();
    }
  };
  rec(n, n);
}

inline BigNat brute_force_g(std::size_t n) {
  BigNat best = 1;
  for_each_partition(n, [&](const std::vector<std::size_t>& parts) {
    BigNat l = 1;
    for (std::size_t a : parts) l = lcm(l, BigNat(a));
    if (l > best) best = l;
  });
  return best;
}

// A multiset {a_i >= 2} with sum(a_i - 1) = n is a partition of n shifted by one.
inline BigNat brute_force_g1(std::size_t n) {
  BigNat best = 1;
  for_each_partition(n, [&](const std::vector<std::size_t>& parts) {
    BigNat l = 1;
    for (std::size_t b : parts) l = lcm(l, BigNat(b + 1));
    if (l > best) best = l;
  });
  return best;
}

}  // namespace mtrank::oracle
