#pragma once

#include <vector>

#include "qhs/arith.hpp"
#include "qhs/weights.hpp"

namespace qhs {

// First n primes (simple sieve, lazily extended; extension is idempotent so
// concurrent readers behave as if the table were immutable).
std::vector<long long> first_primes(int n);

// l(n) = prod over the first n primes of p/(p-1); l(0) = 1.
Rat l_bound(int n);

// l2(n) = (3/2)(4/3) prod_{i=3..n} p_i/(p_i-1) for n >= 2; l2(2) = 2.
Rat l2_bound(int n);

// d <= l(n)*mu, and additionally d <= l(n-1)*mu when all v_i < d/2 and n >= 2.
// Exact rational comparisons.
bool check_degree_bound(const WeightSystem& ws);

// Largest degree a system with Milnor number <= mu_max can have: floor of
// l(n-1)*mu_max for n >= 2, and mu_max + 1 for n = 1 (where d = mu + 1).
Int enumeration_degree_cap(int n, const Int& mu_max);

}  // namespace qhs
