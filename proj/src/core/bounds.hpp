#pragma once

#include <string>
#include <vector>

#include "core/bigint.hpp"

namespace kgon::bounds {

// Smallest n from which sets in convex position maximize the k-hole count:
// 2(k-1)! C(k,4) + k - 1.
BigInt convex_max_threshold(int k);

// C(n,k) + ((k-1)!/2 * C(n-3,k-4) - C(n-3,k-3)/C(k,3)) * T, the hole-count
// upper expression driven by the number T of non-empty triangles.
BigRat khole_upper_expression(long long n, int k, const BigInt& T);

// Coefficient of T in the expression above.
BigRat khole_upper_t_coefficient(long long n, int k);

// C((n-4)/2, (n-k)/2) * (n-k+2)/2, the double-chain hole prefactor. The
// exponential factor is reported symbolically, never evaluated.
BigRat dc_khole_lower_factor(long long n, long long k);

struct BoundRow {
  int k = 0;
  std::string lower;  // printed lower-bound expression in n
  std::string upper;  // printed upper-bound expression in n
  bool lower_asymptotic = false;  // trailing o(n)/o(n^2) term dropped
  bool upper_asymptotic = false;
};

// Published minimum-count bounds for convex k-holes, k in {3..7}.
BoundRow published_bounds(int k);

// Exact evaluation of the polynomial part of the published lower bound at n
// (asymptotic corrections dropped).
BigRat published_lower_value(int k, long long n);

}  // namespace kgon::bounds
