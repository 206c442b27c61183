#pragma once

// Dimension, rank and orbit arithmetic of the families of abelian varieties
// that meet the commutative bound with equality, and of the large-multiplicity
// family that limits the general bound. The existence of the underlying
// fields, algebras and polarizations is taken as given.

#include "mtrank/bignum.hpp"
#include "mtrank/bounds.hpp"
#include "mtrank/lattice.hpp"
#include "mtrank/rootsys.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mtrank {

enum class ExampleId { cm, spin, sl2_product, large_multiplicity };

inline const char* to_string(ExampleId id) {
  switch (id) {
    case ExampleId::cm: return "cm";
    case ExampleId::spin: return "spin";
    case ExampleId::sl2_product: return "sl2_product";
    case ExampleId::large_multiplicity: return "large_multiplicity";
  }
  return "unknown";
}

/// One named arithmetic check. passed is false only for a check that failed;
/// purely informational notes are recorded as passed.
struct CheckNote {
  std::string name;
  bool passed = true;
  std::string value;
};

struct ExampleReport {
  ExampleId example_id = ExampleId::cm;
  unsigned n = 0;
  BigNat abelian_dim;
  unsigned mt_rank = 0;
  ReductiveShape shape;
  bool bound_value_equalled = false;
  std::vector<CheckNote> notes;

  bool all_checks_passed() const {
    for (const auto& note : notes)
      if (!note.passed) return false;
    return true;
  }

  const CheckNote* note(std::string_view name) const {
    for (const auto& n : notes)
      if (n.name == name) return &n;
    return nullptr;
  }
};

/// Spin weights are enumerated explicitly up to this n; beyond it the
/// closed-form catalog dimension is used.
inline constexpr unsigned kSpinOrbitEnumerationLimit = 12;

namespace detail {

inline ExampleReport equality_family_report(ExampleId id, unsigned n, ReductiveShape shape) {
  ExampleReport r;
  r.example_id = id;
  r.n = n;
  r.abelian_dim = pow2(n - 1);
  r.shape = std::move(shape);
  r.mt_rank = r.shape.rank();
  const BoundReport bound = commutative_rank_bound(r.abelian_dim);
  r.bound_value_equalled = r.mt_rank == bound.min_rank && bound.equality;
  r.notes.push_back({"rank_equals_n_plus_1", r.mt_rank == n + 1, std::to_string(r.mt_rank)});
  r.notes.push_back({"commutative_bound_equality", r.bound_value_equalled,
                     "min_rank " + std::to_string(bound.min_rank) + (bound.equality ? " (equality)" : "")});
  return r;
}

inline std::string count_text(const BigNat& a, const char* relation, const BigNat& b) {
  return a.str() + " " + relation + " " + b.str();
}

}  // namespace detail

/// CM by a reflex field of degree 2^(n-1); the Mumford-Tate group is a torus
/// of rank n + 1.
inline ExampleReport cm_example(unsigned n) {
  if (n < 2) throw std::invalid_argument("cm example requires n >= 2");
  ExampleReport r = detail::equality_family_report(ExampleId::cm, n, ReductiveShape{{}, n + 1});
  const unsigned cap = n + 1;
  r.notes.push_back({"torus_rank_cap", r.mt_rank <= cap, std::to_string(r.mt_rank) + " <= " + std::to_string(cap)});
  r.notes.push_back({"reflex_degree", true, pow2(n - 1).str()});
  return r;
}

/// GSpin of a form of signature (2, 2n-1): root system B_n, rank n + 1, spin
/// representation of dimension 2^n. n = 1 is realized through A1.
inline ExampleReport spin_example(unsigned n) {
  if (n == 0 || (n % 4 != 1 && n % 4 != 2)) throw std::invalid_argument("spin example requires n = 1 or 2 mod 4");
  const SimpleType type = n == 1 ? SimpleType(Family::A, 1) : SimpleType(Family::B, n);
  ExampleReport r = detail::equality_family_report(ExampleId::spin, n, ReductiveShape{{type}, 1});
  if (n == 1) r.notes.push_back({"alias", true, "B1 is realized as A1"});
  r.notes.push_back({"signature", true, "(2," + std::to_string(2 * n - 1) + ")"});

  const BigNat expected = pow2(n);
  BigNat characters;
  if (n <= kSpinOrbitEnumerationLimit) {
    // Highest weight of the spin representation (the 2-dim standard one for A1).
    const MinusculeRep rep = minuscule_catalog(type).front();
    characters = count_distinct_characters(weyl_orbit(type, highest_weight(rep)));
    r.notes.push_back({"spin_orbit_size", characters == expected, detail::count_text(characters, "=", expected)});
  } else {
    characters = minuscule_catalog(type).front().dimension;
    r.notes.push_back({"spin_orbit_size", characters == expected, characters.str() + " (catalog)"});
  }
  const BigNat cap = char_count_bound(r.mt_rank);
  r.notes.push_back({"char_count_attained", characters == cap, detail::count_text(characters, "=", cap)});
  return r;
}

/// Quaternion algebra over a totally real field of odd degree n: the group is
/// G_m x SL_2^n over C up to isogeny, acting on the 2^n-dimensional tensor
/// product.
inline ExampleReport sl2_product_example(unsigned n) {
  if (n % 2 == 0) throw std::invalid_argument("sl2 product example requires odd n");
  const SimpleType a1(Family::A, 1);
  ExampleReport r = detail::equality_family_report(ExampleId::sl2_product, n,
                                                   ReductiveShape{std::vector<SimpleType>(n, a1), 1});
  BigNat rep_dim = 1;  // G_m acts by a character
  for (unsigned i = 0; i < n; ++i) rep_dim *= minuscule_catalog(a1).front().dimension;
  r.notes.push_back({"tensor_factorization", rep_dim == pow2(n), detail::count_text(rep_dim, "=", pow2(n))});
  r.notes.push_back({"rep_dim_twice_abelian_dim", rep_dim == 2 * r.abelian_dim,
                     detail::count_text(rep_dim, "=", 2 * r.abelian_dim)});
  const BigNat cap = char_count_bound(r.mt_rank);
  r.notes.push_back({"char_count_attained", rep_dim == cap, detail::count_text(rep_dim, "=", cap)});
  if (n == 3)
    r.notes.push_back({"mumford_anchor", r.abelian_dim == 4 && r.mt_rank == 4, "G_m x SL_2^3, dimension 4, rank 4"});
  return r;
}

/// log2 g - n - (1/2) log2 n for the large-multiplicity family.
inline double large_multiplicity_deviation(unsigned n, const BigNat& g) {
  return log2_big(g) - static_cast<double>(n) - 0.5 * std::log2(static_cast<double>(n));
}

/// Simple abelian variety of dimension n * C(n, r), r = (n-1)/2, whose
/// Mumford-Tate group is a form of GL_n acting through n copies of the r-th
/// exterior power (twice, after restriction of scalars).
inline ExampleReport large_multiplicity_example(unsigned n) {
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("large multiplicity example requires odd n >= 3");
  const unsigned r = (n - 1) / 2;
  ExampleReport rep;
  rep.example_id = ExampleId::large_multiplicity;
  rep.n = n;
  rep.abelian_dim = BigNat(n) * binomial(n, r);
  rep.shape = ReductiveShape{{SimpleType(Family::A, n - 1)}, 1};
  rep.mt_rank = rep.shape.rank();
  const BoundReport commutative = commutative_rank_bound(rep.abelian_dim);
  rep.bound_value_equalled = rep.mt_rank == commutative.min_rank && commutative.equality;

  const BigNat u = quotient_exponent(n, gl_lattice_model(n));
  const BigNat multiplicity = n;
  rep.notes.push_back({"u_gl_model", u == n, "u = " + u.str()});
  rep.notes.push_back({"multiplicity_divides_u", u % multiplicity == 0, multiplicity.str() + " | " + u.str()});
  rep.notes.push_back({"u_within_lcm_bound", u <= u_upper_bound(rep.shape), "lcm bound " + u_upper_bound(rep.shape).str()});

  const BigNat rep_dim = 2 * rep.abelian_dim;
  const bool consistent = triple_noncommutative_check(rep.mt_rank, multiplicity, rep_dim);
  rep.notes.push_back({"triple_noncommutative_consistent", consistent,
                       detail::count_text(multiplicity * pow2(rep.mt_rank - 1), consistent ? ">=" : "<", rep_dim)});

  const BoundReport general = general_rank_bound(rep.abelian_dim);
  rep.notes.push_back({"general_bound_satisfied", general.min_rank <= rep.mt_rank,
                       "min_rank " + std::to_string(general.min_rank) + " <= " + std::to_string(rep.mt_rank)});

  const double delta = large_multiplicity_deviation(n, rep.abelian_dim);
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", delta);
  rep.notes.push_back({"deviation", true, buf});
  return rep;
}

}  // namespace mtrank
