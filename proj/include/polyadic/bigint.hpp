#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace polyadic {

/// Exact arbitrary-precision integer. Residues modulo (K+1)! exceed 64 bits
/// once K >= 20, so every residue-valued quantity in the library uses BigInt.
using BigInt = boost::multiprecision::cpp_int;

using boost::multiprecision::gcd;
using boost::multiprecision::lcm;

/// n! as a BigInt. n is a tower depth plus one in most call sites, so it is
/// small; no memoization.
BigInt factorial(unsigned n);

/// Mathematical remainder: the unique value in [0, m) congruent to a mod m.
/// Requires m >= 1.
BigInt mod_floor(const BigInt& a, const BigInt& m);

/// Extended gcd: returns g = gcd(a, b) and sets x, y with a*x + b*y = g.
BigInt extended_gcd(const BigInt& a, const BigInt& b, BigInt& x, BigInt& y);

/// Smallest depth K >= 0 with n | (K+1)!, or nullopt if K would exceed
/// max_depth. n must be >= 1.
std::optional<unsigned> min_depth_for_modulus(const BigInt& n, unsigned max_depth = 500);

/// True iff v fits in a signed 64-bit integer.
bool fits_int64(const BigInt& v);

/// All divisors of n!, ascending.
std::vector<BigInt> factorial_divisors(unsigned n);

} // namespace polyadic
