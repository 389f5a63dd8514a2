#include "aseries/series_diff2.hpp"

#include <stdexcept>

#include "aseries/core_numbers.hpp"

namespace aseries {

ArithmeticSeries series_from_pair(const DivisorPair& pair) {
    if (pair.d < 2) throw std::invalid_argument("series_from_pair: d must be >= 2");
    if (pair.d > pair.d_prime)
        throw std::invalid_argument("series_from_pair: requires d <= d'");
    return make_series(pair.d_prime - pair.d + 1, 2, pair.d);
}

std::vector<ArithmeticSeries> representations_diff2(u64 n) {
    if (n < 2) throw std::invalid_argument("representations_diff2: n must be >= 2");
    std::vector<ArithmeticSeries> result;
    // Pairs come back with d ascending, so term counts (= d) are already sorted.
    for (const DivisorPair& pair : complementary_pairs(n)) {
        if (pair.d < 2) continue;
        result.push_back(series_from_pair(pair));
    }
    return result;
}

ArithmeticSeries square_series(u64 d) {
    if (d < 2) throw std::invalid_argument("square_series: d must be >= 2");
    return make_series(1, 2, d);
}

ArithmeticSeries oblong_series(u64 d) {
    if (d < 2) throw std::invalid_argument("oblong_series: d must be >= 2");
    return make_series(2, 2, d);
}

std::vector<ArithmeticSeries> power_series_family(u64 base, u64 exponent_plus_one) {
    if (base < 2) throw std::invalid_argument("power_series_family: base must be >= 2");
    if (exponent_plus_one < 2)
        throw std::invalid_argument("power_series_family: exponent must be >= 2");
    std::vector<ArithmeticSeries> result;
    for (u64 k = 1; 2 * k <= exponent_plus_one; ++k) {
        u64 d = 1, d_prime = 1;
        for (u64 i = 0; i < k; ++i) d *= base;
        for (u64 i = 0; i < exponent_plus_one - k; ++i) d_prime *= base;
        result.push_back(series_from_pair({d, d_prime}));
    }
    return result;
}

SpecialSeries special_form_series(SpecialFamily family, u64 k_or_p) {
    const u64 v = k_or_p;
    switch (family) {
        case SpecialFamily::P15a: {
            if (v < 1) throw std::invalid_argument("P15a: k must be >= 1");
            u64 d = 4 * v - 2;
            return {d * (d + 1), oblong_series(d)};
        }
        case SpecialFamily::P15b: {
            if (v < 1) throw std::invalid_argument("P15b: k must be >= 1");
            u64 d = 4 * v + 1;
            return {d * (d + 1), oblong_series(d)};
        }
        case SpecialFamily::P17a: {
            if (v < 1) throw std::invalid_argument("P17a: k must be >= 1");
            u64 d = 4 * v - 1;
            return {d * (d + 1), oblong_series(d)};
        }
        case SpecialFamily::P17b: {
            if (v < 1) throw std::invalid_argument("P17b: k must be >= 1");
            u64 d = 4 * v;
            return {d * (d + 1), oblong_series(d)};
        }
        case SpecialFamily::P16: {
            if (v < 1) throw std::invalid_argument("P16: m must be >= 1");
            return {2 * (2 * v + 1), make_series(2 * v, 2, 2)};
        }
        case SpecialFamily::P18: {
            if (v % 4 != 0 || odd_even_split(v).odd_part < 3)
                throw std::invalid_argument("P18: N must be a multiple of 4 with odd part >= 3");
            return {v, make_series(v / 2 - 1, 2, 2)};
        }
        case SpecialFamily::P19even: {
            if (v < 2) throw std::invalid_argument("P19even: m must be >= 2");
            return {4 * (2 * v + 1), make_series(2 * (v - 1), 2, 4)};
        }
        case SpecialFamily::P19odd: {
            if (v % 8 != 0 || odd_even_split(v).odd_part < 5)
                throw std::invalid_argument("P19odd: N must be a multiple of 8 with odd part >= 5");
            return {v, make_series(v / 4 - 3, 2, 4)};
        }
        case SpecialFamily::P19prime: {
            if (v <= 3 || !is_prime(v))
                throw std::invalid_argument("P19prime: parameter must be a prime > 3");
            return {4 * v, make_series(v - 3, 2, 4)};
        }
    }
    throw std::invalid_argument("special_form_series: unknown family");
}

}  // namespace aseries
