#pragma once

// Smith normal form over the integers and the invariants of a quotient
// lattice Z^m / (row span of a generator matrix).

#include "mtrank/bignum.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mtrank {

/// Dense row-major integer matrix with arbitrary-precision entries.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) throw std::invalid_argument("ragged matrix rows");
      for (long long v : row) entries_.emplace_back(v);
    }
  }

  static IntMatrix from_rows(const std::vector<std::vector<BigInt>>& rows) {
    if (rows.empty() || rows.front().empty()) throw std::invalid_argument("matrix must be nonempty");
    IntMatrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) throw std::invalid_argument("ragged matrix rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  BigInt& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix dimension mismatch");
    IntMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
      }
    return out;
  }

  IntMatrix transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> entries_;
};

/// Invariants of the finitely generated abelian group
/// Z^cols / (row span). Trivial divisors (1) are dropped.
struct QuotientInvariants {
  std::vector<BigNat> elementary_divisors;  // d1 | d2 | ... | dk, each > 1
  std::size_t free_rank = 0;

  /// Exponent of the torsion part (1 when it is trivial).
  BigNat torsion_exponent() const {
    return elementary_divisors.empty() ? BigNat(1) : elementary_divisors.back();
  }

  BigNat torsion_order() const {
    BigNat r = 1;
    for (const auto& d : elementary_divisors) r *= d;
    return r;
  }

  friend bool operator==(const QuotientInvariants&, const QuotientInvariants&) = default;
};

namespace detail {

// Adds factor * row src to row dst.
inline void add_row_multiple(IntMatrix& m, std::size_t dst, std::size_t src, const BigInt& factor) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) += factor * m(src, j);
}
inline void add_col_multiple(IntMatrix& m, std::size_t dst, std::size_t src, const BigInt& factor) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) += factor * m(i, src);
}

// Diagonalizes m in place by unimodular row and column operations and
// returns the nonzero diagonal entries in order of discovery (absolute values).
inline std::vector<BigNat> diagonalize(IntMatrix& m) {
  std::vector<BigNat> diagonal;
  const std::size_t limit = std::min(m.rows(), m.cols());
  for (std::size_t t = 0; t < limit; ++t) {
    for (;;) {
      // Pivot: smallest nonzero absolute value in the trailing block.
      bool found = false;
      std::size_t pr = t, pc = t;
      BigInt best;
      for (std::size_t i = t; i < m.rows(); ++i)
        for (std::size_t j = t; j < m.cols(); ++j) {
          if (m(i, j) == 0) continue;
          BigInt a = abs(m(i, j));
          if (!found || a < best) {
            found = true;
            best = std::move(a);
            pr = i;
            pc = j;
          }
        }
      if (!found) return diagonal;
      m.swap_rows(t, pr);
      m.swap_cols(t, pc);

      bool clean = true;
      for (std::size_t i = t + 1; i < m.rows(); ++i) {
        if (m(i, t) == 0) continue;
        BigInt q = m(i, t) / m(t, t);
        add_row_multiple(m, i, t, -q);
        if (m(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < m.cols(); ++j) {
        if (m(t, j) == 0) continue;
        BigInt q = m(t, j) / m(t, t);
        add_col_multiple(m, j, t, -q);
        if (m(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Row and column cleared; enforce that the pivot divides the rest.
      bool divides = true;
      for (std::size_t i = t + 1; i < m.rows() && divides; ++i)
        for (std::size_t j = t + 1; j < m.cols(); ++j)
          if (m(i, j) % m(t, t) != 0) {
            add_row_multiple(m, t, i, BigInt(1));
            divides = false;
            break;
          }
      if (!divides) continue;
      diagonal.push_back(abs(m(t, t)));
      break;
    }
  }
  return diagonal;
}

}  // namespace detail

/// Elementary divisors and free rank of the cokernel of the row span.
/// The result is independent of pivot choices: divisors are normalized into
/// the unique divisibility chain.
inline QuotientInvariants smith_normal_form(IntMatrix m) {
  if (m.rows() == 0 || m.cols() == 0) throw std::invalid_argument("matrix must be nonempty");
  std::vector<BigNat> diagonal = detail::diagonalize(m);

  // The pivot loop already yields a chain; re-normalize anyway so the output
  // does not depend on that property of the elimination order.
  for (std::size_t i = 0; i < diagonal.size(); ++i)
    for (std::size_t j = i + 1; j < diagonal.size(); ++j) {
      BigNat g = boost::multiprecision::gcd(diagonal[i], diagonal[j]);
      BigNat l = diagonal[i] / g * diagonal[j];
      diagonal[i] = std::move(g);
      diagonal[j] = std::move(l);
    }

  QuotientInvariants out;
  out.free_rank = m.cols() - diagonal.size();
  for (auto& d : diagonal)
    if (d > 1) out.elementary_divisors.push_back(std::move(d));
  return out;
}

/// Exponent of Lambda / Lambda_0 where the rows of sublattice_gens generate
/// Lambda_0 inside Z^ambient_rank. Throws std::domain_error("infinite
/// quotient") if the sublattice does not have finite index.
inline BigNat quotient_exponent(std::size_t ambient_rank, const IntMatrix& sublattice_gens) {
  if (ambient_rank == 0) throw std::invalid_argument("ambient rank must be positive");
  if (sublattice_gens.cols() != ambient_rank)
    throw std::invalid_argument("generator matrix has " + std::to_string(sublattice_gens.cols()) +
                                " columns, expected " + std::to_string(ambient_rank));
  const QuotientInvariants q = smith_normal_form(sublattice_gens);
  if (q.free_rank > 0) throw std::domain_error("infinite quotient");
  return q.torsion_exponent();
}

/// Generators of Lambda_0 for GL_n: the simple roots e_i - e_{i+1} and the
/// determinant character e_1 + ... + e_n.
inline IntMatrix gl_lattice_model(std::size_t n) {
  if (n == 0) throw std::invalid_argument("GL_n model requires n >= 1");
  IntMatrix m(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    m(i, i) = 1;
    m(i, i + 1) = -1;
  }
  for (std::size_t j = 0; j < n; ++j) m(n - 1, j) = 1;
  return m;
}

}  // namespace mtrank
