#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace brauerlab {

using BigInt = boost::multiprecision::cpp_int;

BigInt factorial(int n);
BigInt power(int base, int exponent);
/// Exponent of p in n!.
int legendre_exponent(int n, int p);
/// log_p(q) when q is a power of p, -1 otherwise.
int exact_log(const BigInt& q, int p);
std::string to_string(const BigInt& x);

}  // namespace brauerlab
