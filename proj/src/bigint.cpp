#include "brauerlab/bigint.hpp"

#include <stdexcept>

namespace brauerlab {

BigInt factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of a negative number");
  BigInt r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

BigInt power(int base, int exponent) {
  if (exponent < 0) throw std::invalid_argument("negative exponent");
  BigInt r = 1;
  for (int i = 0; i < exponent; ++i) r *= base;
  return r;
}

int legendre_exponent(int n, int p) {
  int v = 0;
  for (long long q = p; q <= n; q *= p) v += static_cast<int>(n / q);
  return v;
}

int exact_log(const BigInt& q, int p) {
  if (q < 1) return -1;
  BigInt x = q;
  int e = 0;
  while (x % p == 0) {
    x /= p;
    ++e;
  }
  return x == 1 ? e : -1;
}

std::string to_string(const BigInt& x) { return x.str(); }

}  // namespace brauerlab
