// Classification of every integer >= 2 by which arithmetic-series
// representations it admits, decided from factorization structure alone
// (odd/even part and primality of the odd part), never by generating the
// series — that independence is what the agreement tests exercise.
#pragma once

#include <string>
#include <utility>

#include "aseries/types.hpp"

namespace aseries {

// Step-2 taxonomy:
//   PrimeNone    — primes: no representation at all (includes n = 2)
//   OddSumsOnly  — composite odd n, and n = 2^k with k >= 2
//   EvenSumsOnly — n = 2 * odd with odd >= 3
//   Mixed        — n = 2^k * odd with k >= 2 and odd >= 3
enum class Diff2Class { PrimeNone, OddSumsOnly, EvenSumsOnly, Mixed };

// Step-1 taxonomy:
//   PowerOfTwoNone   — n = 2^k, k >= 1: no representation
//   OddLengthsOnly   — odd part q >= 3 with q < 2 * even part
//   SingleEvenLength — q prime with q > 2 * even part (odd primes included)
//   BothLengths      — q composite with q > 2 * even part
enum class ConsecutiveClass { PowerOfTwoNone, OddLengthsOnly, SingleEvenLength, BothLengths };

Diff2Class classify_diff2(u64 n);
ConsecutiveClass classify_consecutive(u64 n);

// Predicted representation counts, from divisor structure:
// step-2 count = ceil(tau(n)/2) - 1, step-1 count = (odd divisor count) - 1.
std::pair<u64, u64> predicted_counts(u64 n);

std::string to_string(Diff2Class c);
std::string to_string(ConsecutiveClass c);
std::string to_string(AliquotKind k);

}  // namespace aseries
