// Rendering and command surface: per-number reports, regeneration of the
// reference tables, the n = 3..max classified appendix, and range
// verification, each in text, CSV, or JSON.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "aseries/classifier.hpp"
#include "aseries/oracle.hpp"
#include "aseries/types.hpp"

namespace aseries {

enum class Format { Text, Csv, Json };

// "text" | "csv" | "json"; throws std::invalid_argument otherwise.
Format parse_format(const std::string& name);

// "a + b (2)", "1 + 3 + 5 (3)", or "3 + 5 + … + 21 (10)" with the middle
// elided once a series runs past four terms.
std::string render_series_display(const ArithmeticSeries& s);

// "2^2·3^2", "2·5", "7"; "1" for n == 1.
std::string factorization_display(u64 n);

// ---- tables ------------------------------------------------------------
// Regenerated table of series, one line per series. Known ids:
//   1  squares d^2 as the first d odd numbers            (d = 2..9)
//   2  oblongs d(d+1) as the first d even numbers        (d = 2..9)
//   4  (4k-2)(4k-1) as the first 4k-2 even numbers       (k = 1..5)
//   5  (4k+1)(4k+2) as the first 4k+1 even numbers       (k = 1..5)
//   6  (4k-1)4k     as the first 4k-1 even numbers       (k = 1..5)
//   7  4k(4k+1)     as the first 4k   even numbers       (k = 1..5)
//   8  triangular numbers n(n+1)/2                        (n = 2..9)
//  10  perfect numbers 2^n(2^(n+1)-1), exponent prime-driven, first five
//  11  2^n(2^(n+1)-1) with composite odd part, all consecutive sums, first five n
//  12  2^(n-1)p, p the least prime above 2^n: the unique even-length sum  (n = 1..10)
//  13  2^(n-1)(2m+1), least m with 2m+1 composite above 2^n, all sums     (n = 1..9)
//  14  2^(n-1)p^2, largest 2^n below p^2: the odd- and even-length pair   (first ten odd p)
struct TableLine {
    std::vector<u64> keys;
    u64 number = 0;
    std::string number_display;
    ArithmeticSeries series;

    friend bool operator==(const TableLine&, const TableLine&) = default;
};

struct TableData {
    int id = 0;
    std::string title;
    std::vector<std::string> key_columns;
    std::vector<TableLine> lines;
};

bool is_known_table(int id);
TableData table_data(int id);

// ---- appendix ------------------------------------------------------------
struct AppendixRow {
    u64 n = 0;
    std::string factorization;
    Diff2Class diff2_class = Diff2Class::PrimeNone;
    std::vector<ArithmeticSeries> diff2;
    ConsecutiveClass consecutive_class = ConsecutiveClass::PowerOfTwoNone;
    std::vector<ArithmeticSeries> consecutive;
};

// "1A" / "1B" / "1C", empty for PrimeNone.
std::string diff2_column_tag(Diff2Class c);
// "2A" / "2B" / "2C", empty for PowerOfTwoNone.
std::string consecutive_column_tag(ConsecutiveClass c);

// Rows for n = 3..max_n. Every series is checked against the brute-force
// enumeration before it is handed out; a disagreement throws std::logic_error.
std::vector<AppendixRow> appendix_rows(u64 max_n);

// ---- commands ------------------------------------------------------------
std::string cmd_repr(u64 n, std::optional<int> step_filter, Format format);
std::string cmd_classify(u64 n, Format format);
std::string cmd_table(int id, Format format);
std::string cmd_appendix(u64 max_n, Format format);

struct VerifyRendering {
    std::string output;
    bool certified = false;
};

VerifyRendering cmd_verify(u64 from, u64 to, Format format);

}  // namespace aseries
