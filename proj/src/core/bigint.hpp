#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace kgon {

// All counting and coordinate arithmetic is exact. Coordinates and counts
// use arbitrary-precision integers; relation fitting uses exact rationals.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;
  }
  return r;
}

inline BigInt factorial(long long n) {
  BigInt r = 1;
  for (long long i = 2; i <= n; ++i) r *= i;
  return r;
}

// "29 4/9" style mixed-number rendering, exact.
std::string mixed_fraction(const BigRat& q);

// Decimal approximation with the given number of fractional digits,
// round-half-away-from-zero. Exact arithmetic until the final string.
std::string decimal_approx(const BigRat& q, int digits);

}  // namespace kgon
