#include "core/bounds.hpp"

#include "core/error.hpp"

namespace kgon::bounds {

BigInt convex_max_threshold(int k) {
  if (k < 4) fail(Errc::invalid_argument, "threshold defined for k >= 4");
  return 2 * factorial(k - 1) * binomial(k, 4) + k - 1;
}

BigRat khole_upper_t_coefficient(long long n, int k) {
  if (k < 4 || n < k) fail(Errc::invalid_argument, "need n >= k >= 4");
  BigRat perms(factorial(k - 1), 2);
  return perms * BigRat(binomial(n - 3, k - 4)) -
         BigRat(binomial(n - 3, k - 3), binomial(k, 3));
}

BigRat khole_upper_expression(long long n, int k, const BigInt& T) {
  if (T < 0) fail(Errc::invalid_argument, "T must be non-negative");
  return BigRat(binomial(n, k)) + khole_upper_t_coefficient(n, k) * BigRat(T);
}

BigRat dc_khole_lower_factor(long long n, long long k) {
  if (k > n) fail(Errc::invalid_argument, "k must be at most n");
  if (n % 2 != 0 || k % 2 != 0)
    fail(Errc::invalid_argument, "parity mismatch: n and k must both be even");
  return BigRat(binomial((n - 4) / 2, (n - k) / 2)) * BigRat(n - k + 2, 2);
}

BoundRow published_bounds(int k) {
  BoundRow row;
  row.k = k;
  switch (k) {
    case 3:
      row.lower = "n^2 - 32/7 n + 22/7";
      row.upper = "1.6196 n^2 + o(n^2)";
      row.upper_asymptotic = true;
      return row;
    case 4:
      row.lower = "n^2/2 - 9/4 n - o(n)";
      row.upper = "1.9397 n^2 + o(n^2)";
      row.lower_asymptotic = true;
      row.upper_asymptotic = true;
      return row;
    case 5:
      row.lower = "3n/4 - o(n)";
      row.upper = "1.0207 n^2 + o(n^2)";
      row.lower_asymptotic = true;
      row.upper_asymptotic = true;
      return row;
    case 6:
      row.lower = "n/229 - 4";
      row.upper = "0.2006 n^2 + o(n^2)";
      row.upper_asymptotic = true;
      return row;
    case 7:
      row.lower = "0";
      row.upper = "0";
      return row;
    default:
      fail(Errc::invalid_argument, "published bounds cover k in {3..7}");
  }
}

BigRat published_lower_value(int k, long long n) {
  BigRat nn(n);
  switch (k) {
    case 3: return nn * nn - BigRat(32, 7) * nn + BigRat(22, 7);
    case 4: return nn * nn / 2 - BigRat(9, 4) * nn;
    case 5: return BigRat(3, 4) * nn;
    case 6: return nn / 229 - 4;
    case 7: return BigRat(0);
    default: fail(Errc::invalid_argument, "published bounds cover k in {3..7}");
  }
}

}  // namespace kgon::bounds
