#include "aseries/series_consecutive.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "aseries/core_numbers.hpp"

namespace aseries {

ArithmeticSeries consecutive_from_odd_divisor(u64 n, u64 d) {
    if (d % 2 == 0) throw std::invalid_argument("consecutive_from_odd_divisor: d must be odd");
    if (d < 3) throw std::invalid_argument("consecutive_from_odd_divisor: d must be >= 3");
    if (n % d != 0) throw std::invalid_argument("consecutive_from_odd_divisor: d must divide n");
    const u64 d_prime = n / d;
    assert(d != 2 * d_prime);
    if (d < 2 * d_prime) {
        return make_series(d_prime - (d - 1) / 2, 1, d);
    }
    return make_series((d + 1) / 2 - d_prime, 1, 2 * d_prime);
}

std::vector<ArithmeticSeries> representations_consecutive(u64 n) {
    if (n < 2) throw std::invalid_argument("representations_consecutive: n must be >= 2");
    std::vector<ArithmeticSeries> result;
    for (u64 d : divisors(odd_even_split(n).odd_part)) {
        if (d < 3) continue;
        result.push_back(consecutive_from_odd_divisor(n, d));
    }
    std::sort(result.begin(), result.end(), [](const auto& a, const auto& b) {
        return a.terms != b.terms ? a.terms < b.terms : a.first < b.first;
    });
    return result;
}

RepresentedSeries triangular_series(u64 count) {
    if (count < 2) throw std::invalid_argument("triangular_series: count must be >= 2");
    return {count * (count + 1) / 2, make_series(1, 1, count)};
}

ArithmeticSeries max_length_series(u64 n) {
    const auto [even_part, odd_part] = odd_even_split(n);
    if (odd_part < 3 || odd_part >= 2 * even_part)
        throw std::invalid_argument("max_length_series: requires 3 <= odd part < 2 * even part");
    const u64 m = (odd_part - 1) / 2;
    return make_series(even_part - m, 1, odd_part);
}

PrimeSquarePair prime_square_pair(u64 p, u64 n_exp) {
    if (p < 3 || p % 2 == 0 || !is_prime(p))
        throw std::invalid_argument("prime_square_pair: p must be an odd prime");
    if (n_exp < 1 || (n_exp >= 64 || (u64{1} << n_exp) >= p * p))
        throw std::invalid_argument("prime_square_pair: requires 2^n < p^2");
    const u64 half_pow = u64{1} << (n_exp - 1);  // 2^(n-1)
    PrimeSquarePair result;
    result.n = half_pow * p * p;
    result.odd_series = make_series(half_pow * p - (p - 1) / 2, 1, p);
    result.even_series = make_series((p * p + 1) / 2 - half_pow, 1, 2 * half_pow);
    return result;
}

}  // namespace aseries
