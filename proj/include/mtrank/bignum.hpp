#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mtrank {

/// Arbitrary-precision integer used for every LCM, dimension and bound value.
/// Values that are semantically nonnegative are checked at API boundaries.
using BigNat = boost::multiprecision::cpp_int;
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigNat pow2(unsigned exponent) {
  BigNat r = 1;
  r <<= exponent;
  return r;
}

inline BigNat binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigNat r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

inline BigNat lcm(const BigNat& a, const BigNat& b) {
  if (a == 0 || b == 0) return 0;
  return a / boost::multiprecision::gcd(a, b) * b;
}

/// True iff x is a positive power of two (including 1 = 2^0).
inline bool is_power_of_two(const BigNat& x) {
  return x > 0 && (x & (x - 1)) == 0;
}

/// Base-2 logarithm of a positive integer, accurate to double rounding
/// regardless of magnitude.
inline double log2_big(const BigNat& x) {
  if (x <= 0) throw std::domain_error("log2 of nonpositive integer");
  const unsigned top = boost::multiprecision::msb(x);
  if (top < 53) return std::log2(static_cast<double>(x));
  const unsigned shift = top - 52;
  const BigNat mantissa = x >> shift;
  return std::log2(static_cast<double>(mantissa)) + static_cast<double>(shift);
}

inline double ln_big(const BigNat& x) { return log2_big(x) * std::log(2.0); }

inline std::string to_decimal(const BigInt& x) { return x.str(); }

inline std::string to_string(const Rational& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

/// Parses a nonnegative decimal integer; throws std::invalid_argument on
/// anything else (signs, whitespace, empty input).
inline BigNat parse_nat(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty integer");
  for (char c : text)
    if (c < '0' || c > '9')
      throw std::invalid_argument("malformed integer: " + std::string(text));
  return BigNat(std::string(text));
}

}  // namespace mtrank
