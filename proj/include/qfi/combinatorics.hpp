#pragma once

// Small exact-combinatorics helpers shared across modules.

#include <cstdint>
#include <vector>

#include "qfi/monomial.hpp"

namespace qfi {

// C(n,k) as an exact signed 64-bit value. Callers stay within n <= 64,
// where every value fits. Returns 0 for k < 0 or k > n.
long long binomial(long long n, long long k);

// C(n,k) clamped at cap+1, computed without overflow; used for budget
// checks where the true value may exceed 64 bits.
unsigned long long binomial_capped(unsigned long long n, unsigned long long k,
                                   unsigned long long cap);

// All squarefree monomials of degree d over x_1..x_n, canonically sorted.
std::vector<Monomial> all_monomials_of_degree(int n, int d);

}  // namespace qfi
