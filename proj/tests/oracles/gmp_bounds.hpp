#pragma once

// Independent big-integer recomputation of the six defect bounds with GMP.

#include <gmpxx.h>

#include <string>

namespace oracle {

inline mpz_class gmp_factorial(unsigned long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

/// Bound for formula tag 'a'..'f' at |Q| = q (a power of the relevant prime).
inline std::string gmp_bound(char tag, unsigned long q) {
  unsigned long log2q = 0;
  while ((1ul << log2q) < q) ++log2q;
  mpz_class r;
  switch (tag) {
    case 'a':
    case 'c':
    case 'd': r = gmp_factorial(q); break;
    case 'b': r = gmp_factorial(q + 2) / 2; break;
    case 'e': r = mpz_class(q) * gmp_factorial(log2q); break;
    case 'f': r = mpz_class(q) * gmp_factorial(log2q + 1); break;
    default: return "";
  }
  return r.get_str();
}

}  // namespace oracle
