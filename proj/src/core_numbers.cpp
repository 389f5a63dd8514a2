#include "aseries/core_numbers.hpp"

#include <algorithm>
#include <stdexcept>

namespace aseries {

namespace {

constexpr u64 kSieveBound = 1 << 16;

std::vector<u64> sieve_primes(u64 bound) {
    std::vector<bool> composite(bound, false);
    std::vector<u64> primes;
    for (u64 i = 2; i < bound; ++i) {
        if (composite[i]) continue;
        primes.push_back(i);
        for (u64 j = i * i; j < bound; j += i) composite[j] = true;
    }
    return primes;
}

u64 checked_mul(u64 a, u64 b) {
    u64 r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("sigma: 64-bit overflow");
    return r;
}

u64 checked_add(u64 a, u64 b) {
    u64 r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("sigma: 64-bit overflow");
    return r;
}

}  // namespace

const std::vector<u64>& small_primes() {
    static const std::vector<u64> primes = sieve_primes(kSieveBound);
    return primes;
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : small_primes()) {
        if (p * p > n) return true;
        if (n % p == 0) return n == p;
    }
    // No factor below 2^16; continue with odd candidates.
    for (u64 d = kSieveBound + 1; d <= n / d; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

Factorization factorize(u64 n) {
    if (n == 0) throw std::invalid_argument("factorize: n must be positive");
    Factorization f{n, {}};
    u64 m = n;
    bool table_sufficed = false;  // every prime p with p*p <= m was tried
    for (u64 p : small_primes()) {
        if (p * p > m) {
            table_sufficed = true;
            break;
        }
        if (m % p != 0) continue;
        u64 e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        f.factors.push_back({p, e});
    }
    if (!table_sufficed) {
        for (u64 d = kSieveBound + 1; d <= m / d; d += 2) {
            if (m % d != 0) continue;
            u64 e = 0;
            while (m % d == 0) {
                m /= d;
                ++e;
            }
            f.factors.push_back({d, e});
        }
    }
    if (m > 1) f.factors.push_back({m, 1});
    return f;
}

std::vector<u64> divisors(u64 n) {
    Factorization f = factorize(n);
    std::vector<u64> divs{1};
    for (const auto& [prime, exponent] : f.factors) {
        const std::size_t base_count = divs.size();
        u64 power = 1;
        for (u64 e = 1; e <= exponent; ++e) {
            power *= prime;
            for (std::size_t i = 0; i < base_count; ++i) divs.push_back(divs[i] * power);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

std::vector<DivisorPair> complementary_pairs(u64 n) {
    if (n < 2) throw std::invalid_argument("complementary_pairs: n must be >= 2");
    std::vector<DivisorPair> pairs;
    for (u64 d : divisors(n)) {
        u64 q = n / d;
        if (d > q) break;
        pairs.push_back({d, q});
    }
    return pairs;
}

OddEvenSplit odd_even_split(u64 n) {
    if (n == 0) throw std::invalid_argument("odd_even_split: n must be positive");
    u64 even = 1;
    while (n % 2 == 0) {
        n /= 2;
        even *= 2;
    }
    return {even, n};
}

u64 tau(const Factorization& f) {
    u64 t = 1;
    for (const auto& pp : f.factors) t *= pp.exponent + 1;
    return t;
}

u64 sigma(const Factorization& f) {
    u64 total = 1;
    for (const auto& [prime, exponent] : f.factors) {
        // 1 + p + p^2 + ... + p^e, accumulated with overflow checks.
        u64 term = 1, acc = 1;
        for (u64 e = 1; e <= exponent; ++e) {
            term = checked_mul(term, prime);
            acc = checked_add(acc, term);
        }
        total = checked_mul(total, acc);
    }
    return total;
}

u64 sigma(u64 n) { return sigma(factorize(n)); }

AliquotClass aliquot_classify(u64 n) {
    if (n < 2) throw std::invalid_argument("aliquot_classify: n must be >= 2");
    u64 s = sigma(n);
    u64 twice = checked_mul(n, 2);
    AliquotClass c;
    if (s == twice) {
        c.kind = AliquotKind::Perfect;
        c.excess = 0;
    } else if (s > twice) {
        c.kind = AliquotKind::Abundant;
        c.excess = static_cast<i64>(s - twice);
    } else {
        c.kind = AliquotKind::Deficient;
        c.excess = -static_cast<i64>(twice - s);
    }
    return c;
}

}  // namespace aseries
