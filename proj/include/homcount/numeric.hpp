#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace homcount {

// All counting arithmetic is exact: arbitrary-precision integers and
// rationals, no floating point anywhere in the library.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// q^e for integer e of either sign; q must be nonzero when e < 0.
Rat rat_pow(const Rat& q, long long e);

Int factorial(unsigned n);
Int factorial(const Int& n);  // requires 0 <= n < 2^32

// binomial(n, k) for n >= 0; n may be a big integer (rising-factorial form).
Int binomial(const Int& n, unsigned k);

bool is_integer(const Rat& q);

// Exact conversion; throws NonIntegerResult when q is not an integer.
Int to_integer(const Rat& q);

std::string to_decimal(const Int& v);
std::string to_decimal(const Rat& q);  // "p" when integral, else "p/q"

bool is_odd_prime(long long p);

}  // namespace homcount
