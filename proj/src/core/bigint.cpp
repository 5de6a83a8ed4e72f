#include "core/bigint.hpp"

namespace kgon {

std::string mixed_fraction(const BigRat& q) {
  BigInt num = boost::multiprecision::numerator(q);
  BigInt den = boost::multiprecision::denominator(q);
  bool neg = num < 0;
  if (neg) num = -num;
  BigInt whole = num / den;
  BigInt rest = num % den;
  std::string s = neg ? "-" : "";
  if (rest == 0) return s + whole.str();
  if (whole == 0) return s + rest.str() + "/" + den.str();
  return s + whole.str() + " " + rest.str() + "/" + den.str();
}

std::string decimal_approx(const BigRat& q, int digits) {
  BigInt num = boost::multiprecision::numerator(q);
  BigInt den = boost::multiprecision::denominator(q);
  bool neg = num < 0;
  if (neg) num = -num;
  BigInt scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  // round half away from zero
  BigInt scaled = (num * scale * 2 + den) / (den * 2);
  BigInt whole = scaled / scale;
  BigInt frac = scaled % scale;
  std::string s = neg && scaled != 0 ? "-" : "";
  s += whole.str();
  if (digits > 0) {
    std::string f = frac.str();
    s += "." + std::string(digits - f.size(), '0') + f;
  }
  return s;
}

}  // namespace kgon
