#include <sstream>
#include <stdexcept>

#include "aseries/core_numbers.hpp"
#include "aseries/report.hpp"
#include "aseries/series_consecutive.hpp"
#include "aseries/series_diff2.hpp"

namespace aseries {

namespace {

std::string product_display(u64 a, u64 b) {
    std::ostringstream out;
    out << a << "·" << b;
    return out.str();
}

// Tables 4..7 all list oblong numbers d(d+1) indexed by k; only the map
// from k to d differs.
TableData oblong_family_table(int id, const std::string& title, SpecialFamily family) {
    TableData t{id, title, {"k"}, {}};
    for (u64 k = 1; k <= 5; ++k) {
        const SpecialSeries s = special_form_series(family, k);
        const u64 d = s.series.terms;
        t.lines.push_back({{k}, s.n, product_display(d, d + 1), s.series});
    }
    return t;
}

u64 next_prime_above(u64 bound) {
    for (u64 c = bound + 1;; ++c) {
        if (is_prime(c)) return c;
    }
}

// Smallest odd composite strictly above bound.
u64 next_odd_composite_above(u64 bound) {
    for (u64 c = bound % 2 == 0 ? bound + 1 : bound + 2;; c += 2) {
        if (!is_prime(c)) return c;
    }
}

}  // namespace

bool is_known_table(int id) {
    switch (id) {
        case 1: case 2: case 4: case 5: case 6: case 7:
        case 8: case 10: case 11: case 12: case 13: case 14:
            return true;
        default:
            return false;
    }
}

TableData table_data(int id) {
    switch (id) {
        case 1: {
            TableData t{1, "Squares as sums of the first d odd numbers", {"d"}, {}};
            for (u64 d = 2; d <= 9; ++d) {
                std::ostringstream disp;
                disp << d << "^2";
                t.lines.push_back({{d}, d * d, disp.str(), square_series(d)});
            }
            return t;
        }
        case 2: {
            TableData t{2, "Oblong numbers as sums of the first d even numbers", {"d"}, {}};
            for (u64 d = 2; d <= 9; ++d)
                t.lines.push_back({{d}, d * (d + 1), product_display(d, d + 1), oblong_series(d)});
            return t;
        }
        case 4:
            return oblong_family_table(4, "Oblongs (4k-2)(4k-1) as first 4k-2 even numbers",
                                       SpecialFamily::P15a);
        case 5:
            return oblong_family_table(5, "Oblongs (4k+1)(4k+2) as first 4k+1 even numbers",
                                       SpecialFamily::P15b);
        case 6:
            return oblong_family_table(6, "Oblongs (4k-1)4k as first 4k-1 even numbers",
                                       SpecialFamily::P17a);
        case 7:
            return oblong_family_table(7, "Oblongs 4k(4k+1) as first 4k even numbers",
                                       SpecialFamily::P17b);
        case 8: {
            TableData t{8, "Triangular numbers as sums of the first n integers", {"n"}, {}};
            for (u64 n = 2; n <= 9; ++n) {
                const RepresentedSeries r = triangular_series(n);
                t.lines.push_back({{n}, r.n, std::to_string(r.n), r.series});
            }
            return t;
        }
        case 10: {
            TableData t{10, "Perfect numbers 2^n(2^(n+1)-1) as sums from 1", {"n", "p"}, {}};
            for (u64 n = 1; t.lines.size() < 5; ++n) {
                const u64 p = (u64{1} << (n + 1)) - 1;
                if (!is_prime(p)) continue;
                const u64 number = (u64{1} << n) * p;
                t.lines.push_back(
                    {{n, p}, number, std::to_string(number), consecutive_from_odd_divisor(number, p)});
            }
            return t;
        }
        case 11: {
            TableData t{11, "2^n(2^(n+1)-1), composite odd part: all consecutive sums", {"n"}, {}};
            u64 collected = 0;
            for (u64 n = 1; collected < 5; ++n) {
                const u64 q = (u64{1} << (n + 1)) - 1;
                if (is_prime(q)) continue;
                ++collected;
                const u64 number = (u64{1} << n) * q;
                for (const auto& s : representations_consecutive(number))
                    t.lines.push_back({{n}, number, std::to_string(number), s});
            }
            return t;
        }
        case 12: {
            TableData t{12, "2^(n-1)p, least prime p above 2^n: the single even-length sum",
                        {"n", "p"}, {}};
            for (u64 n = 1; n <= 10; ++n) {
                const u64 p = next_prime_above(u64{1} << n);
                const u64 number = (u64{1} << (n - 1)) * p;
                t.lines.push_back(
                    {{n, p}, number, factorization_display(number), consecutive_from_odd_divisor(number, p)});
            }
            return t;
        }
        case 13: {
            TableData t{13, "2^(n-1)(2m+1), least composite odd part above 2^n: all sums",
                        {"n", "m"}, {}};
            for (u64 n = 1; n <= 9; ++n) {
                const u64 q = next_odd_composite_above(u64{1} << n);
                const u64 m = (q - 1) / 2;
                const u64 number = (u64{1} << (n - 1)) * q;
                for (const auto& s : representations_consecutive(number))
                    t.lines.push_back({{n, m}, number, factorization_display(number), s});
            }
            return t;
        }
        case 14: {
            TableData t{14, "2^(n-1)p^2, largest 2^n below p^2: odd- and even-length sums",
                        {"p", "n"}, {}};
            u64 p = 3;
            for (int count = 0; count < 10; ++count, p = next_prime_above(p)) {
                u64 n = 1;
                while ((u64{1} << (n + 1)) < p * p) ++n;  // largest n with 2^n < p^2
                const PrimeSquarePair pair = prime_square_pair(p, n);
                t.lines.push_back({{p, n}, pair.n, factorization_display(pair.n), pair.odd_series});
                t.lines.push_back({{p, n}, pair.n, factorization_display(pair.n), pair.even_series});
            }
            return t;
        }
        default:
            throw std::invalid_argument("unknown table id: " + std::to_string(id));
    }
}

}  // namespace aseries
