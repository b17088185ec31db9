#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gpq {

/** Exact rational arithmetic for enumeration-based probabilities.
 *
 * Arbitrary precision so that sums over r^n function tables and Lagrange
 * interpolation stay exact; convert to double only at reporting boundaries.
 */
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

inline std::string to_string(const Rational& q) { return q.str(); }

/** n! as a big integer. */
inline BigInt factorial_big(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

/** Falling factorial n(n-1)...(n-t+1); 1 for t = 0. */
inline BigInt falling_factorial_big(std::int64_t n, int t) {
  BigInt r = 1;
  for (int i = 0; i < t; ++i) r *= BigInt(n - i);
  return r;
}

/** Integer power with exact big-integer result. */
inline BigInt pow_big(std::int64_t base, int exp) {
  BigInt r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

/** Exact binomial coefficient in 64 bits; throws on overflow. */
inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;
  }
  if (r > BigInt(UINT64_MAX)) throw std::overflow_error("binomial overflows 64 bits");
  return r.convert_to<std::uint64_t>();
}

}  // namespace gpq
