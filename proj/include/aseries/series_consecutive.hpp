// Representations of N as sums of consecutive positive integers (common
// difference 1), driven by the odd divisors of N.
//
// For each odd divisor d > 1 of N = d * d' there is exactly one series:
//   d <  2d'  ->  d terms centered at d':     (d' - (d-1)/2) + ... + (d' + (d-1)/2)
//   d >  2d'  ->  2d' terms:                  ((d+1)/2 - d') + ... + ((d-1)/2 + d')
// d == 2d' cannot occur (d is odd), so the branch is total. Powers of two,
// having no odd divisor > 1, have no representation at all.
#pragma once

#include <vector>

#include "aseries/types.hpp"

namespace aseries {

// The unique consecutive-sum representation attached to odd divisor d of n.
// Requires d odd, d >= 3, d | n.
ArithmeticSeries consecutive_from_odd_divisor(u64 n, u64 d);

// Every consecutive-sum representation of n, one per odd divisor >= 3,
// ascending by term count (ties broken by first term, though term counts
// never tie: odd lengths are distinct divisors, even lengths distinct
// cofactor doubles, and the two kinds differ in parity). Requires n >= 2.
std::vector<ArithmeticSeries> representations_consecutive(u64 n);

// The triangular number count*(count+1)/2 as 1 + 2 + ... + count. count >= 2.
struct RepresentedSeries {
    u64 n = 0;
    ArithmeticSeries series;

    friend bool operator==(const RepresentedSeries&, const RepresentedSeries&) = default;
};

RepresentedSeries triangular_series(u64 count);

// The longest representation of n = 2^k * q (q odd), valid when 3 <= q < 2^(k+1):
// q terms centered at 2^k. Equals the last entry of representations_consecutive(n).
ArithmeticSeries max_length_series(u64 n);

// For an odd prime p and exponent n with 2^n < p^2, the number 2^(n-1) * p^2
// together with its only two representations: p terms centered at 2^(n-1)*p,
// and 2^n terms starting at (p^2+1)/2 - 2^(n-1).
struct PrimeSquarePair {
    u64 n = 0;
    ArithmeticSeries odd_series;
    ArithmeticSeries even_series;

    friend bool operator==(const PrimeSquarePair&, const PrimeSquarePair&) = default;
};

PrimeSquarePair prime_square_pair(u64 p, u64 n_exp);

}  // namespace aseries
