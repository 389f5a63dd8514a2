// Representations of N as sums of successive odd or successive even positive
// numbers (arithmetic series with common difference 2).
//
// The whole module rests on one identity: for complementary divisors
// d * d' == N with 1 < d <= d', N is the d-term series
//   (d' - d + 1) + (d' - d + 3) + ... + (d' + d - 1).
// The terms are all odd when d' - d is even and all even when d' - d is odd.
// Primes have no such representation.
#pragma once

#include <vector>

#include "aseries/types.hpp"

namespace aseries {

// The d-term step-2 series for pair (d, d'). Requires d >= 2; a (1, N) pair
// would be the single term N, which does not count as a sum.
ArithmeticSeries series_from_pair(const DivisorPair& pair);

// Every step-2 representation of n, one per divisor pair with d >= 2,
// ascending by term count. Empty exactly when n is prime. Requires n >= 2.
std::vector<ArithmeticSeries> representations_diff2(u64 n);

// d^2 as the sum of the first d odd numbers: 1 + 3 + ... + (2d - 1). d >= 2.
ArithmeticSeries square_series(u64 d);

// d * (d + 1) as the sum of the first d even numbers: 2 + 4 + ... + 2d. d >= 2.
ArithmeticSeries oblong_series(u64 d);

// The floor((n+1)/2) all-odd series of base^(n+1) with n+1 = exponent_plus_one:
// for k = 1 .. floor((n+1)/2), base^k terms starting at base^(n-k+1) - base^k + 1.
// Exhaustive when base is prime; a subset otherwise. exponent_plus_one >= 2.
std::vector<ArithmeticSeries> power_series_family(u64 base, u64 exponent_plus_one);

// Named special-form constructors. Each family builds one integer of a
// particular shape together with a distinguished step-2 series for it; the
// series always appears in representations_diff2 of that integer.
//
// Family      parameter            integer            series
// P15a        k >= 1               (4k-2)(4k-1)       first 4k-2 even numbers
// P15b        k >= 1               (4k+1)(4k+2)       first 4k+1 even numbers
// P17a        k >= 1               (4k-1)4k           first 4k-1 even numbers
// P17b        k >= 1               4k(4k+1)           first 4k   even numbers
// P16         m >= 1               2(2m+1)            2m + (2m+2)
// P18         N, 4 | N, odd part >= 3   N             (N/2 - 1) + (N/2 + 1)
// P19even     m >= 2               4(2m+1)            2(m-1) + 2m + 2(m+1) + 2(m+2)
// P19odd      N, 8 | N, odd part >= 5   N             (N/4 -3) + (N/4 -1) + (N/4 +1) + (N/4 +3)
// P19prime    prime p > 3          4p                 (p-3) + (p-1) + (p+1) + (p+3)
enum class SpecialFamily { P15a, P15b, P16, P17a, P17b, P18, P19even, P19odd, P19prime };

struct SpecialSeries {
    u64 n = 0;
    ArithmeticSeries series;

    friend bool operator==(const SpecialSeries&, const SpecialSeries&) = default;
};

SpecialSeries special_form_series(SpecialFamily family, u64 k_or_p);

}  // namespace aseries
