#pragma once

// Rank lower bounds for Mumford-Tate and l-adic monodromy groups, all decided
// in cleared-denominator integer form so power-of-two ties are exact.

#include "mtrank/bignum.hpp"
#include "mtrank/landau.hpp"
#include "mtrank/rootsys.hpp"

#include <cmath>
#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mtrank {

enum class BoundKind { commutative, general, triple_commutative, triple_noncommutative };

inline const char* to_string(BoundKind k) {
  switch (k) {
    case BoundKind::commutative: return "commutative";
    case BoundKind::general: return "general";
    case BoundKind::triple_commutative: return "triple_commutative";
    case BoundKind::triple_noncommutative: return "triple_noncommutative";
  }
  return "unknown";
}

/// Outcome of a rank-bound query. witness_lhs >= witness_rhs is the bound
/// inequality evaluated at min_rank.
struct BoundReport {
  BigNat input_dimension;
  BoundKind bound_kind = BoundKind::commutative;
  unsigned min_rank = 0;
  BigNat witness_lhs;
  BigNat witness_rhs;
  bool equality = false;
};

/// Number of distinct torus characters allowed in a pure triple of weights
/// {0, 1}: 2^(rank - 1).
inline BigNat char_count_bound(unsigned rank) {
  if (rank == 0) throw std::invalid_argument("rank must be positive");
  return pow2(rank - 1);
}

/// dim rho <= M * 2^(rank - 1).
inline BigNat dim_bound(unsigned rank, const BigNat& max_multiplicity) {
  if (rank == 0) throw std::invalid_argument("rank must be positive");
  if (max_multiplicity <= 0) throw std::invalid_argument("multiplicity must be positive");
  return max_multiplicity * pow2(rank - 1);
}

inline BigNat count_distinct_characters(const std::vector<Weight>& weights) {
  const std::set<Weight> distinct(weights.begin(), weights.end());
  return distinct.size();
}

/// rk G >= log2 g + 2, i.e. the least n with 2^n >= 4g.
inline BoundReport commutative_rank_bound(const BigNat& g) {
  if (g < 1) throw std::invalid_argument("dimension must be at least 1");
  const BigNat target = 4 * g;
  unsigned n = boost::multiprecision::msb(target);
  if (pow2(n) < target) ++n;
  BoundReport r;
  r.input_dimension = g;
  r.bound_kind = BoundKind::commutative;
  r.min_rank = n;
  r.witness_lhs = pow2(n);
  r.witness_rhs = target;
  r.equality = r.witness_lhs == r.witness_rhs;
  return r;
}

/// 2^(rank-1) >= dim.
inline bool triple_commutative_check(unsigned rank, const BigNat& dim) {
  if (rank == 0) throw std::invalid_argument("rank must be positive");
  return pow2(rank - 1) >= dim;
}

/// u * 2^(rank-1) >= dim.
inline bool triple_noncommutative_check(unsigned rank, const BigNat& u, const BigNat& dim) {
  if (rank == 0) throw std::invalid_argument("rank must be positive");
  if (u < 1) throw std::invalid_argument("u must be at least 1");
  return u * pow2(rank - 1) >= dim;
}

/// Hard ceiling on the rank searched by general_rank_bound.
inline constexpr unsigned kGeneralRankSearchLimit = 256;

namespace detail {
inline const LandauTable& bound_search_table() {
  static const LandauTable table(kGeneralRankSearchLimit);
  return table;
}
}  // namespace detail

/// n + alpha(n) sqrt(n ln n) >= log2 g + 2. Since alpha(n) sqrt(n ln n) is
/// log2 g1(n), this is 2^n * g1(n) >= 4g, searched upward from n = 2.
inline BoundReport general_rank_bound(const BigNat& g) {
  if (g < 1) throw std::invalid_argument("dimension must be at least 1");
  const auto& table = detail::bound_search_table();
  const BigNat target = 4 * g;
  for (unsigned n = 2; n <= kGeneralRankSearchLimit; ++n) {
    BigNat lhs = pow2(n) * table.g1(n);
    if (lhs >= target) {
      BoundReport r;
      r.input_dimension = g;
      r.bound_kind = BoundKind::general;
      r.min_rank = n;
      r.equality = lhs == target;
      r.witness_lhs = std::move(lhs);
      r.witness_rhs = target;
      return r;
    }
  }
  throw std::overflow_error("general rank bound exceeds search limit of " + std::to_string(kGeneralRankSearchLimit));
}

/// A product of pairwise non-isogenous simple factors has the Mumford-Tate
/// group of the product, so the bound applies to the summed dimension.
inline BoundReport product_rank_bound(const std::vector<BigNat>& dims) {
  if (dims.empty()) throw std::invalid_argument("dimension list must be nonempty");
  BigNat total = 0;
  for (const auto& d : dims) {
    if (d < 1) throw std::invalid_argument("each dimension must be at least 1");
    total += d;
  }
  return general_rank_bound(total);
}

struct HodgeSplit {
  BigNat g0;
  BigNat g1;
  Rational r;
  std::pair<Rational, Rational> values;
};

/// Values of <omega, mu_H> for a pure triple with weight multiplicities g0, g1.
inline HodgeSplit hodge_split(const BigNat& g0, const BigNat& g1) {
  if (g0 < 0 || g1 < 0) throw std::invalid_argument("multiplicities must be nonnegative");
  if (g0 + g1 == 0) throw std::invalid_argument("g0 + g1 must be positive");
  const BigInt total = g0 + g1;
  HodgeSplit h{g0, g1, Rational(g1, total), {Rational(g0, total), Rational(-g1, total)}};
  return h;
}

struct DivisionFieldExponent {
  double value = 0;
  std::optional<Rational> exact;  // set when g is a power of two
};

/// Exponent n (log2 g + 2) of l in the division-field degree bound. The
/// constant C(A, K, l) is not modeled.
inline DivisionFieldExponent division_field_exponent(const BigNat& g, unsigned n) {
  if (g < 1) throw std::invalid_argument("dimension must be at least 1");
  if (n == 0) throw std::invalid_argument("n must be positive");
  DivisionFieldExponent e;
  e.value = static_cast<double>(n) * (log2_big(g) + 2.0);
  if (is_power_of_two(g)) {
    const unsigned k = boost::multiprecision::msb(g);
    e.exact = Rational(BigInt(n) * (k + 2));
    e.value = static_cast<double>(n) * static_cast<double>(k + 2);
  }
  return e;
}

}  // namespace mtrank
