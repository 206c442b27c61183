#pragma once

// Simple root systems in their standard orthonormal realizations: Cartan
// matrices, fundamental groups, minuscule weights and Weyl orbits, plus the
// lcm-of-exponents bound for u(G) and its exhaustive check against g1.

#include "mtrank/bignum.hpp"
#include "mtrank/landau.hpp"
#include "mtrank/lattice.hpp"

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <deque>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mtrank {

enum class Family { A, B, C, D, E, F, G };

inline char family_letter(Family f) { return "ABCDEFG"[static_cast<int>(f)]; }

class SimpleType {
 public:
  /// Throws std::invalid_argument for inadmissible ranks, including the
  /// low-rank aliases B1, C1, C2, D1, D2, D3.
  SimpleType(Family family, unsigned rank) : family_(family), rank_(rank) {
    if (const std::string why = inadmissible_reason(family, rank); !why.empty())
      throw std::invalid_argument(why);
  }

  Family family() const { return family_; }
  unsigned rank() const { return rank_; }
  std::string name() const { return family_letter(family_) + std::to_string(rank_); }

  static bool admissible(Family family, unsigned rank) { return inadmissible_reason(family, rank).empty(); }

  friend auto operator<=>(const SimpleType&, const SimpleType&) = default;

 private:
  static std::string inadmissible_reason(Family family, unsigned rank) {
    const std::string label = family_letter(family) + std::to_string(rank);
    const auto alias = [&](std::string_view canonical) {
      return label + " is an alias of " + std::string(canonical) + "; use the canonical name";
    };
    switch (family) {
      case Family::A:
        if (rank >= 1) return {};
        break;
      case Family::B:
        if (rank == 1) return alias("A1");
        if (rank >= 2) return {};
        break;
      case Family::C:
        if (rank == 1) return alias("A1");
        if (rank == 2) return alias("B2");
        if (rank >= 3) return {};
        break;
      case Family::D:
        if (rank == 2) return alias("A1 x A1");
        if (rank == 3) return alias("A3");
        if (rank >= 4) return {};
        break;
      case Family::E:
        if (rank >= 6 && rank <= 8) return {};
        break;
      case Family::F:
        if (rank == 4) return {};
        break;
      case Family::G:
        if (rank == 2) return {};
        break;
    }
    return "inadmissible root system " + label;
  }

  Family family_;
  unsigned rank_;
};

/// Parses labels such as "A4", "d6", "E7".
inline SimpleType parse_simple_type(std::string_view label) {
  if (label.size() < 2) throw std::invalid_argument("malformed root system label: " + std::string(label));
  const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(label.front())));
  if (letter < 'A' || letter > 'G') throw std::invalid_argument("unknown root system family: " + std::string(label));
  const std::string_view digits = label.substr(1);
  if (digits.size() > 4 || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw std::invalid_argument("malformed root system rank: " + std::string(label));
  return SimpleType(static_cast<Family>(letter - 'A'), static_cast<unsigned>(std::stoul(std::string(digits))));
}

/// Every admissible simple type of rank at most max_rank, ordered by
/// (rank, family).
inline std::vector<SimpleType> admissible_types(unsigned max_rank) {
  std::vector<SimpleType> out;
  for (unsigned r = 1; r <= max_rank; ++r)
    for (int f = 0; f < 7; ++f)
      if (SimpleType::admissible(static_cast<Family>(f), r)) out.emplace_back(static_cast<Family>(f), r);
  return out;
}

/// A vector with exact rational coordinates in the ambient Euclidean space.
struct Weight {
  std::vector<Rational> coords;

  friend bool operator==(const Weight&, const Weight&) = default;
  friend bool operator<(const Weight& a, const Weight& b) { return a.coords < b.coords; }
};

inline Rational inner(const Weight& a, const Weight& b) {
  if (a.coords.size() != b.coords.size()) throw std::invalid_argument("weight dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.coords.size(); ++i)
    if (!a.coords[i].is_zero() && !b.coords[i].is_zero()) s += a.coords[i] * b.coords[i];
  return s;
}

inline std::string to_string(const Weight& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.coords.size(); ++i) {
    if (i) s += ",";
    s += to_string(w.coords[i]);
  }
  return s + ")";
}

/// Dimension of the ambient space of the standard realization.
inline std::size_t ambient_dimension(const SimpleType& t) {
  switch (t.family()) {
    case Family::A: return t.rank() + 1;
    case Family::B:
    case Family::C:
    case Family::D: return t.rank();
    case Family::E: return 8;
    case Family::F: return 4;
    case Family::G: return 3;
  }
  return 0;
}

namespace detail {

inline Weight unit_combo(std::size_t dim, std::initializer_list<std::pair<std::size_t, Rational>> terms) {
  Weight w{std::vector<Rational>(dim, Rational(0))};
  for (const auto& [index, value] : terms) w.coords.at(index) += value;
  return w;
}

inline Weight difference(std::size_t dim, std::size_t i, std::size_t j) {
  return unit_combo(dim, {{i, Rational(1)}, {j, Rational(-1)}});
}

}  // namespace detail

/// Simple roots in Bourbaki numbering.
inline std::vector<Weight> simple_roots(const SimpleType& t) {
  using detail::difference;
  using detail::unit_combo;
  const std::size_t n = t.rank();
  const std::size_t dim = ambient_dimension(t);
  const Rational half(1, 2);
  std::vector<Weight> roots;
  switch (t.family()) {
    case Family::A:
      for (std::size_t i = 0; i < n; ++i) roots.push_back(difference(dim, i, i + 1));
      break;
    case Family::B:
    case Family::C:
    case Family::D:
      for (std::size_t i = 0; i + 1 < n; ++i) roots.push_back(difference(dim, i, i + 1));
      if (t.family() == Family::B) roots.push_back(unit_combo(dim, {{n - 1, Rational(1)}}));
      if (t.family() == Family::C) roots.push_back(unit_combo(dim, {{n - 1, Rational(2)}}));
      if (t.family() == Family::D) roots.push_back(unit_combo(dim, {{n - 2, Rational(1)}, {n - 1, Rational(1)}}));
      break;
    case Family::E: {
      Weight first{std::vector<Rational>(8, -half)};
      first.coords[0] = half;
      first.coords[7] = half;
      roots.push_back(first);
      roots.push_back(unit_combo(8, {{0, Rational(1)}, {1, Rational(1)}}));
      for (std::size_t i = 1; i + 2 <= n; ++i) roots.push_back(difference(8, i, i - 1));
      break;
    }
    case Family::F:
      roots.push_back(difference(4, 1, 2));
      roots.push_back(difference(4, 2, 3));
      roots.push_back(unit_combo(4, {{3, Rational(1)}}));
      roots.push_back(unit_combo(4, {{0, half}, {1, -half}, {2, -half}, {3, -half}}));
      break;
    case Family::G:
      roots.push_back(difference(3, 0, 1));
      roots.push_back(unit_combo(3, {{0, Rational(-2)}, {1, Rational(1)}, {2, Rational(1)}}));
      break;
  }
  return roots;
}

/// <v, alpha^vee> = 2 (v, alpha) / (alpha, alpha).
inline Rational coroot_pairing(const Weight& v, const Weight& alpha) { return 2 * inner(v, alpha) / inner(alpha, alpha); }

inline Weight reflect(const Weight& v, const Weight& alpha) {
  const Rational c = coroot_pairing(v, alpha);
  Weight out = v;
  if (c != 0)
    for (std::size_t i = 0; i < out.coords.size(); ++i)
      if (!alpha.coords[i].is_zero()) out.coords[i] -= c * alpha.coords[i];
  return out;
}

/// Cartan matrix a_ij = <alpha_i^vee, alpha_j>, Bourbaki numbering
/// (so B2 is [[2,-1],[-2,2]]).
inline IntMatrix cartan_matrix(const SimpleType& t) {
  const auto roots = simple_roots(t);
  IntMatrix m(roots.size(), roots.size());
  std::vector<Rational> norms;
  for (const auto& r : roots) norms.push_back(inner(r, r));
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = 0; j < roots.size(); ++j) {
      const Rational a = 2 * inner(roots[j], roots[i]) / norms[i];
      if (boost::multiprecision::denominator(a) != 1) throw std::logic_error("non-integral Cartan entry");
      m(i, j) = boost::multiprecision::numerator(a);
    }
  return m;
}

/// Fundamental weights w_i with <w_i, alpha_j^vee> = delta_ij, lying in the
/// span of the roots.
inline std::vector<Weight> fundamental_weights(const SimpleType& t) {
  const auto roots = simple_roots(t);
  const IntMatrix cartan = cartan_matrix(t);
  const std::size_t n = roots.size();
  // w_i = sum_k M_ik alpha_k with M = (A^T)^{-1}; invert by Gauss-Jordan.
  std::vector<std::vector<Rational>> aug(n, std::vector<Rational>(2 * n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = Rational(cartan(j, i));
    aug[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (aug[pivot][col] == 0) ++pivot;
    std::swap(aug[pivot], aug[col]);
    const Rational p = aug[col][col];
    for (auto& x : aug[col]) x /= p;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || aug[r][col] == 0) continue;
      const Rational f = aug[r][col];
      for (std::size_t c = 0; c < 2 * n; ++c) aug[r][c] -= f * aug[col][c];
    }
  }
  std::vector<Weight> weights;
  const std::size_t dim = ambient_dimension(t);
  for (std::size_t i = 0; i < n; ++i) {
    Weight w{std::vector<Rational>(dim, Rational(0))};
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t c = 0; c < dim; ++c) w.coords[c] += aug[i][n + k] * roots[k].coords[c];
    weights.push_back(std::move(w));
  }
  return weights;
}

/// Weight lattice / root lattice, from the Smith form of the Cartan matrix.
inline QuotientInvariants fundamental_group_invariants(const SimpleType& t) { return smith_normal_form(cartan_matrix(t)); }

/// Exponent of the fundamental group; at most rank + 1, with equality only
/// in type A.
inline unsigned long fundamental_group_exponent(const SimpleType& t) {
  return fundamental_group_invariants(t).torsion_exponent().convert_to<unsigned long>();
}

/// Root datum shape of a reductive group: simple factors plus a central torus.
struct ReductiveShape {
  std::vector<SimpleType> simple_factors;
  unsigned central_rank = 0;

  unsigned rank() const {
    unsigned r = central_rank;
    for (const auto& t : simple_factors) r += t.rank();
    return r;
  }

  std::string name() const {
    std::string s;
    for (const auto& t : simple_factors) s += (s.empty() ? "" : "x") + t.name();
    if (central_rank > 0) s += (s.empty() ? "" : "x") + std::string("T") + std::to_string(central_rank);
    return s.empty() ? "trivial" : s;
  }
};

/// lcm of the fundamental-group exponents of the simple factors; u(G)
/// divides this.
inline BigNat u_upper_bound(const ReductiveShape& shape) {
  BigNat l = 1;
  for (const auto& t : shape.simple_factors) l = lcm(l, BigNat(fundamental_group_exponent(t)));
  return l;
}

struct MinusculeRep {
  SimpleType type;
  unsigned fundamental_weight_index;  // 1-based, Bourbaki numbering
  BigNat dimension;
};

/// All minuscule fundamental representations of t (empty for E8, F4, G2).
inline std::vector<MinusculeRep> minuscule_catalog(const SimpleType& t) {
  const unsigned n = t.rank();
  std::vector<MinusculeRep> reps;
  switch (t.family()) {
    case Family::A:
      for (unsigned k = 1; k <= n; ++k) reps.push_back({t, k, binomial(n + 1, k)});
      break;
    case Family::B: reps.push_back({t, n, pow2(n)}); break;
    case Family::C: reps.push_back({t, 1, BigNat(2 * n)}); break;
    case Family::D:
      reps.push_back({t, 1, BigNat(2 * n)});
      reps.push_back({t, n - 1, pow2(n - 1)});
      reps.push_back({t, n, pow2(n - 1)});
      break;
    case Family::E:
      if (n == 6) {
        reps.push_back({t, 1, BigNat(27)});
        reps.push_back({t, 6, BigNat(27)});
      } else if (n == 7) {
        reps.push_back({t, 7, BigNat(56)});
      }
      break;
    case Family::F:
    case Family::G: break;
  }
  return reps;
}

inline Weight highest_weight(const MinusculeRep& rep) {
  return fundamental_weights(rep.type).at(rep.fundamental_weight_index - 1);
}

/// Closure of {w} under the simple reflections of t, in canonical
/// (lexicographic) order. Throws std::invalid_argument when w has the wrong
/// dimension or pairs non-integrally with a simple coroot, and
/// std::length_error when the orbit exceeds max_size.
inline std::vector<Weight> weyl_orbit(const SimpleType& t, const Weight& w, std::size_t max_size = std::size_t{1} << 22) {
  if (w.coords.size() != ambient_dimension(t))
    throw std::invalid_argument("weight has dimension " + std::to_string(w.coords.size()) + ", " + t.name() +
                                " is realized in dimension " + std::to_string(ambient_dimension(t)));
  const auto roots = simple_roots(t);
  for (const auto& alpha : roots)
    if (boost::multiprecision::denominator(coroot_pairing(w, alpha)) != 1)
      throw std::invalid_argument("weight is not in the weight lattice of " + t.name());

  std::set<Weight> seen{w};
  std::deque<Weight> frontier{w};
  while (!frontier.empty()) {
    Weight v = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& alpha : roots) {
      Weight image = reflect(v, alpha);
      if (seen.insert(image).second) {
        if (seen.size() > max_size) throw std::length_error("Weyl orbit exceeds size limit");
        frontier.push_back(std::move(image));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

struct RankMaximum {
  unsigned rank = 0;
  BigNat max_lcm;
  std::vector<SimpleType> witness;
  BigNat g1;
};

struct UBoundViolation {
  std::vector<SimpleType> factors;
  BigNat lcm;
  BigNat bound;
  std::string reason;
};

struct UVersusG1Report {
  unsigned max_rank = 0;
  std::size_t multisets_checked = 0;
  std::vector<UBoundViolation> violations;
  std::vector<RankMaximum> per_rank;  // index r-1 holds total rank r
};

inline std::string factors_name(const std::vector<SimpleType>& factors) {
  std::string s;
  for (const auto& t : factors) s += (s.empty() ? "" : "x") + t.name();
  return s.empty() ? "trivial" : s;
}

/// Enumerates every multiset of admissible simple types with total rank at
/// most max_rank and checks lcm(e_i) <= g1(sum(e_i - 1)) <= g1(total rank).
inline UVersusG1Report verify_u_vs_g1(unsigned max_rank) {
  if (max_rank < 1) throw std::invalid_argument("max_rank must be positive");
  const auto types = admissible_types(max_rank);
  std::vector<unsigned long> exponents;
  for (const auto& t : types) exponents.push_back(fundamental_group_exponent(t));
  const LandauTable table(max_rank);

  UVersusG1Report report;
  report.max_rank = max_rank;
  for (unsigned r = 1; r <= max_rank; ++r) report.per_rank.push_back({r, BigNat(0), {}, table.g1(r)});

  std::vector<std::size_t> chosen;
  const auto check = [&](unsigned total_rank, unsigned shifted, const BigNat& l) {
    ++report.multisets_checked;
    std::vector<SimpleType> factors;
    for (std::size_t i : chosen) factors.push_back(types[i]);
    if (shifted > total_rank)
      report.violations.push_back({factors, l, BigNat(total_rank), "sum(e_i - 1) exceeds total rank"});
    else if (l > table.g1(shifted))
      report.violations.push_back({factors, l, table.g1(shifted), "lcm exceeds g1(sum(e_i - 1))"});
    else if (table.g1(shifted) > table.g1(total_rank))
      report.violations.push_back({factors, table.g1(shifted), table.g1(total_rank), "g1 not monotone"});
    auto& slot = report.per_rank[total_rank - 1];
    if (l > slot.max_lcm) {
      slot.max_lcm = l;
      slot.witness = std::move(factors);
    }
  };
  // Nondecreasing index sequences enumerate each multiset exactly once.
  const auto rec = [&](auto&& self, std::size_t start, unsigned total_rank, unsigned shifted, const BigNat& l) -> void {
    for (std::size_t i = start; i < types.size(); ++i) {
      const unsigned next_rank = total_rank + types[i].rank();
      if (next_rank > max_rank) break;
      const unsigned next_shifted = shifted + static_cast<unsigned>(exponents[i] - 1);
      const BigNat next_lcm = lcm(l, BigNat(exponents[i]));
      chosen.push_back(i);
      check(next_rank, next_shifted, next_lcm);
      self(self, i, next_rank, next_shifted, next_lcm);
      chosen.pop_back();
    }
  };
  rec(rec, 0, 0, 0, BigNat(1));
  return report;
}

}  // namespace mtrank
