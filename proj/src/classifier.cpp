#include "aseries/classifier.hpp"

#include <stdexcept>

#include "aseries/core_numbers.hpp"

namespace aseries {

Diff2Class classify_diff2(u64 n) {
    if (n < 2) throw std::invalid_argument("classify_diff2: n must be >= 2");
    const auto [even_part, odd_part] = odd_even_split(n);
    if (even_part == 1) {
        return is_prime(n) ? Diff2Class::PrimeNone : Diff2Class::OddSumsOnly;
    }
    if (even_part == 2) {
        return odd_part == 1 ? Diff2Class::PrimeNone  // n == 2
                             : Diff2Class::EvenSumsOnly;
    }
    return odd_part == 1 ? Diff2Class::OddSumsOnly : Diff2Class::Mixed;
}

ConsecutiveClass classify_consecutive(u64 n) {
    if (n < 2) throw std::invalid_argument("classify_consecutive: n must be >= 2");
    const auto [even_part, odd_part] = odd_even_split(n);
    if (odd_part == 1) return ConsecutiveClass::PowerOfTwoNone;
    if (odd_part < 2 * even_part) return ConsecutiveClass::OddLengthsOnly;
    return is_prime(odd_part) ? ConsecutiveClass::SingleEvenLength
                              : ConsecutiveClass::BothLengths;
}

std::pair<u64, u64> predicted_counts(u64 n) {
    if (n < 2) throw std::invalid_argument("predicted_counts: n must be >= 2");
    const Factorization f = factorize(n);
    const u64 diff2 = (tau(f) + 1) / 2 - 1;
    u64 odd_divisors = 1;
    for (const auto& pp : f.factors) {
        if (pp.prime != 2) odd_divisors *= pp.exponent + 1;
    }
    return {diff2, odd_divisors - 1};
}

std::string to_string(Diff2Class c) {
    switch (c) {
        case Diff2Class::PrimeNone: return "PrimeNone";
        case Diff2Class::OddSumsOnly: return "OddSumsOnly";
        case Diff2Class::EvenSumsOnly: return "EvenSumsOnly";
        case Diff2Class::Mixed: return "Mixed";
    }
    return "?";
}

std::string to_string(ConsecutiveClass c) {
    switch (c) {
        case ConsecutiveClass::PowerOfTwoNone: return "PowerOfTwoNone";
        case ConsecutiveClass::OddLengthsOnly: return "OddLengthsOnly";
        case ConsecutiveClass::SingleEvenLength: return "SingleEvenLength";
        case ConsecutiveClass::BothLengths: return "BothLengths";
    }
    return "?";
}

std::string to_string(AliquotKind k) {
    switch (k) {
        case AliquotKind::Perfect: return "Perfect";
        case AliquotKind::Abundant: return "Abundant";
        case AliquotKind::Deficient: return "Deficient";
    }
    return "?";
}

}  // namespace aseries
