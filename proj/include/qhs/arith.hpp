#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace qhs {

// Exact arithmetic everywhere: arbitrary-precision integers and rationals.
// Rationals are kept in lowest terms with positive denominator by the backend.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using boost::multiprecision::abs;
using boost::multiprecision::denominator;
using boost::multiprecision::gcd;
using boost::multiprecision::lcm;
using boost::multiprecision::numerator;

// Checked narrowing; throws std::domain_error naming `what` on overflow.
std::uint64_t to_u64_checked(const Int& x, const char* what);
long long to_i64_checked(const Int& x, const char* what);

bool is_prime_u64(std::uint64_t x);

// Deterministic primality; requires x < 2^64 (far beyond anything enumerated).
bool is_prime(const Int& x);

// Prime factorization via Miller-Rabin + Pollard rho; factors ascending.
std::vector<std::pair<std::uint64_t, int>> factorize_u64(std::uint64_t x);

// All positive divisors of x >= 1, ascending. Requires x < 2^64.
std::vector<Int> divisors(const Int& x);

Int euler_phi(const Int& m);

// x^{-1} (mod m) for m >= 1 and gcd(x, m) = 1, result in [0, m).
Int mod_inverse(const Int& x, const Int& m);

}  // namespace qhs
