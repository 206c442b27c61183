#pragma once

// Landau's function g(n), the shifted variant g1(n), and the alpha(n)
// correction term together with the inequalities that bound it.

#include "mtrank/bignum.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace mtrank {

namespace detail {

inline std::vector<unsigned> primes_up_to(unsigned limit) {
  std::vector<unsigned> primes;
  if (limit < 2) return primes;
  std::vector<bool> composite(limit + 1, false);
  for (unsigned p = 2; p <= limit; ++p) {
    if (composite[p]) continue;
    primes.push_back(p);
    for (std::size_t q = std::size_t{p} * p; q <= limit; q += p) composite[q] = true;
  }
  return primes;
}

// best[b] = max product of pairwise coprime prime powers p^k whose total cost
// (p^k - offset) is at most b. Padding with 1s (g) or 2s (g1) turns "at most"
// into "exactly" without lowering the LCM.
inline std::vector<BigNat> prime_power_knapsack(std::size_t max_budget, unsigned offset) {
  std::vector<BigNat> best(max_budget + 1, BigNat(1));
  for (unsigned p : primes_up_to(static_cast<unsigned>(max_budget) + offset)) {
    for (std::size_t budget = max_budget + 1; budget-- > 0;) {
      BigNat power = p;
      std::size_t cost = p - offset;
      while (cost <= budget) {
        BigNat candidate = best[budget - cost] * power;
        if (candidate > best[budget]) best[budget] = std::move(candidate);
        power *= p;
        if (power > max_budget + offset) break;
        cost = static_cast<std::size_t>(power) - offset;
      }
    }
  }
  return best;
}

}  // namespace detail

/// Immutable table of g(0..max_n) and g1(0..max_n).
class LandauTable {
 public:
  explicit LandauTable(std::size_t max_n)
      : g_(detail::prime_power_knapsack(max_n, 0)),
        g1_(detail::prime_power_knapsack(max_n, 1)) {}

  std::size_t max_n() const { return g_.size() - 1; }

  const BigNat& g(std::size_t n) const { return g_.at(n); }
  const BigNat& g1(std::size_t n) const { return g1_.at(n); }

  const std::vector<BigNat>& g_values() const { return g_; }
  const std::vector<BigNat>& g1_values() const { return g1_; }

 private:
  std::vector<BigNat> g_;
  std::vector<BigNat> g1_;
};

/// Maximum LCM of positive integers summing to n.
inline BigNat landau_g(std::size_t n) { return detail::prime_power_knapsack(n, 0).back(); }

/// Maximum LCM of integers a_i >= 2 with sum(a_i - 1) = n.
inline BigNat landau_g1(std::size_t n) { return detail::prime_power_knapsack(n, 1).back(); }

struct AlphaValue {
  std::size_t n = 0;
  double alpha = 0;
  double log2_g1 = 0;
  double envelope = 0;
};

/// Massias' constant in ln g(n) < c * sqrt(n ln n), n >= 2.
inline constexpr double kMassiasConstant = 1.05314;

/// f(x) = ((x + sqrt(2x)) ln(x + sqrt(2x))) / (x ln x), decreasing for x > 1.
inline double envelope_ratio(double x) {
  const double y = x + std::sqrt(2.0 * x);
  return (y * std::log(y)) / (x * std::log(x));
}

inline double alpha_envelope(std::size_t n) {
  if (n < 2) throw std::invalid_argument("alpha_envelope requires n >= 2");
  return kMassiasConstant * std::sqrt(envelope_ratio(static_cast<double>(n))) / std::log(2.0);
}

inline AlphaValue alpha(const LandauTable& table, std::size_t n) {
  if (n < 2) throw std::invalid_argument("alpha requires n >= 2");
  AlphaValue v;
  v.n = n;
  v.log2_g1 = log2_big(table.g1(n));
  const double nd = static_cast<double>(n);
  v.alpha = v.log2_g1 / std::sqrt(nd * std::log(nd));
  v.envelope = alpha_envelope(n);
  return v;
}

inline AlphaValue alpha(std::size_t n) {
  if (n < 2) throw std::invalid_argument("alpha requires n >= 2");
  return alpha(LandauTable(n), n);
}

/// Largest index the sandwich check at n reads from the g table.
inline std::size_t sandwich_reach(std::size_t n) {
  auto s = static_cast<std::size_t>(std::sqrt(2.0 * static_cast<double>(n)));
  while ((s + 1) * (s + 1) <= 2 * n) ++s;
  while (s * s > 2 * n) --s;
  return n + s;
}

/// g(n) <= g1(n) <= g(n + floor(sqrt(2n))), exact.
inline bool sandwich_check(const LandauTable& table, std::size_t n) {
  if (n < 1) throw std::invalid_argument("sandwich_check requires n >= 1");
  return table.g(n) <= table.g1(n) && table.g1(n) <= table.g(sandwich_reach(n));
}

inline bool sandwich_check(std::size_t n) { return sandwich_check(LandauTable(sandwich_reach(n)), n); }

/// ln g(n) < 1.05314 sqrt(n ln n).
inline bool massias_check(const LandauTable& table, std::size_t n) {
  if (n < 2) throw std::invalid_argument("massias_check requires n >= 2");
  const double nd = static_cast<double>(n);
  return ln_big(table.g(n)) < kMassiasConstant * std::sqrt(nd * std::log(nd));
}

inline bool massias_check(std::size_t n) { return massias_check(LandauTable(n), n); }

}  // namespace mtrank
