// Domain types shared across the arithmetic-series library.
#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace aseries {

using u64 = std::uint64_t;
using i64 = std::int64_t;

// One prime-power entry of a factorization.
struct PrimePower {
    u64 prime = 0;
    u64 exponent = 0;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// n as an ordered product of prime powers. n == 1 has an empty factor list.
// Primes are strictly increasing, exponents >= 1.
struct Factorization {
    u64 n = 0;
    std::vector<PrimePower> factors;

    friend bool operator==(const Factorization&, const Factorization&) = default;
};

// Complementary divisors d * d_prime == N with d <= d_prime.
struct DivisorPair {
    u64 d = 0;
    u64 d_prime = 0;

    friend bool operator==(const DivisorPair&, const DivisorPair&) = default;
};

// n = even_part * odd_part with even_part the maximal power of two dividing n.
struct OddEvenSplit {
    u64 even_part = 0;
    u64 odd_part = 0;

    friend bool operator==(const OddEvenSplit&, const OddEvenSplit&) = default;
};

enum class AliquotKind { Perfect, Abundant, Deficient };

// excess = sigma(n) - 2n; Perfect/Abundant/Deficient by sign.
struct AliquotClass {
    AliquotKind kind = AliquotKind::Deficient;
    i64 excess = 0;

    friend bool operator==(const AliquotClass&, const AliquotClass&) = default;
};

// An arithmetic progression of positive integers: first, first+step, ..., last.
// step is 1 (consecutive integers) or 2 (successive odd or even numbers).
// terms >= 2 everywhere in this library; single-term sums are not representations.
struct ArithmeticSeries {
    u64 first = 0;
    int step = 0;
    u64 terms = 0;
    u64 last = 0;  // first + step * (terms - 1), stored for convenience

    u64 sum() const { return terms * (first + last) / 2; }

    friend bool operator==(const ArithmeticSeries&, const ArithmeticSeries&) = default;
    friend auto operator<=>(const ArithmeticSeries&, const ArithmeticSeries&) = default;
};

inline ArithmeticSeries make_series(u64 first, int step, u64 terms) {
    return ArithmeticSeries{first, step, terms, first + static_cast<u64>(step) * (terms - 1)};
}

}  // namespace aseries
