// Integer infrastructure: primality, factorization, divisor enumeration,
// odd/even part split, divisor-count (tau) and divisor-sum (sigma), and
// perfect/abundant/deficient classification.
//
// Everything here is pure and stateless; the shared prime table is built
// once and read-only afterwards, so concurrent use is unrestricted.
#pragma once

#include <vector>

#include "aseries/types.hpp"

namespace aseries {

// Primes below 2^16, sieved once. Enough to trial-divide any value whose
// second-largest prime factor is below 2^16; factorize() falls back to an
// odd-candidate scan beyond that.
const std::vector<u64>& small_primes();

// n >= 1. True iff n has exactly two divisors.
bool is_prime(u64 n);

// n >= 1. Trial division; throws std::invalid_argument on n == 0.
Factorization factorize(u64 n);

// All divisors of n, strictly ascending. Throws on n == 0.
std::vector<u64> divisors(u64 n);

// One pair per unordered factorization d * d' == n with d <= d'.
// Count is ceil(tau(n) / 2). Requires n >= 2.
std::vector<DivisorPair> complementary_pairs(u64 n);

// n = 2^v * q with q odd; returns (2^v, q). n >= 1.
OddEvenSplit odd_even_split(u64 n);

// Number of divisors, from the factorization.
u64 tau(const Factorization& f);

// Sum of divisors, from the factorization (closed form per prime power).
// Throws std::overflow_error instead of wrapping.
u64 sigma(const Factorization& f);
u64 sigma(u64 n);

// Perfect/Abundant/Deficient with the signed excess sigma(n) - 2n. n >= 2.
AliquotClass aliquot_classify(u64 n);

}  // namespace aseries
