#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "aseries/core_numbers.hpp"
#include "aseries/report.hpp"
#include "aseries/series_consecutive.hpp"
#include "aseries/series_diff2.hpp"

namespace aseries {

namespace {

using nlohmann::json;

json series_to_json(const ArithmeticSeries& s) {
    return json{{"first", s.first}, {"last", s.last}, {"terms", s.terms}};
}

json series_list_to_json(const std::vector<ArithmeticSeries>& list) {
    json arr = json::array();
    for (const auto& s : list) arr.push_back(series_to_json(s));
    return arr;
}

std::string no_repr_note(int step) {
    return step == 2 ? "no representations (prime)" : "no representations (power of two)";
}

// Display width rather than byte count, so "2·3" lines up despite the
// multi-byte separator.
std::size_t utf8_width(const std::string& s) {
    std::size_t glyphs = 0;
    for (unsigned char c : s)
        if ((c & 0xC0) != 0x80) ++glyphs;
    return glyphs;
}

std::string pad_utf8(const std::string& s, std::size_t width) {
    const std::size_t glyphs = utf8_width(s);
    return glyphs >= width ? s : s + std::string(width - glyphs, ' ');
}

std::string join_series_displays(const std::vector<ArithmeticSeries>& list) {
    std::string out;
    for (std::size_t i = 0; i < list.size(); ++i) {
        if (i > 0) out += "; ";
        out += render_series_display(list[i]);
    }
    return out;
}

const std::vector<ArithmeticSeries>& pick(int step,
                                          const std::vector<ArithmeticSeries>& diff2,
                                          const std::vector<ArithmeticSeries>& consecutive) {
    return step == 2 ? diff2 : consecutive;
}

}  // namespace

std::string cmd_repr(u64 n, std::optional<int> step_filter, Format format) {
    if (n < 2) throw std::invalid_argument("repr: N must be >= 2");
    if (step_filter && *step_filter != 1 && *step_filter != 2)
        throw std::invalid_argument("repr: step must be 1 or 2");

    const auto diff2 = representations_diff2(n);
    const auto consecutive = representations_consecutive(n);
    const std::string diff2_class = to_string(classify_diff2(n));
    const std::string consec_class = to_string(classify_consecutive(n));
    // Difference 2 first, matching the two-problem order everywhere else.
    const std::vector<int> steps =
        step_filter ? std::vector<int>{*step_filter} : std::vector<int>{2, 1};

    std::ostringstream out;
    switch (format) {
        case Format::Text: {
            out << n << " = " << factorization_display(n) << "\n";
            for (int step : steps) {
                const auto& list = pick(step, diff2, consecutive);
                out << "difference " << step << " ("
                    << (step == 2 ? diff2_class : consec_class) << "):\n";
                if (list.empty()) out << "  " << no_repr_note(step) << "\n";
                for (const auto& s : list) out << "  " << render_series_display(s) << "\n";
            }
            break;
        }
        case Format::Csv: {
            out << "n,step,first,last,terms\n";
            for (int step : steps)
                for (const auto& s : pick(step, diff2, consecutive))
                    out << n << "," << step << "," << s.first << "," << s.last << "," << s.terms
                        << "\n";
            break;
        }
        case Format::Json: {
            json arr = json::array();
            for (int step : steps) {
                arr.push_back(json{{"n", n},
                                   {"step", step},
                                   {"series", series_list_to_json(pick(step, diff2, consecutive))},
                                   {"diff2_class", diff2_class},
                                   {"consecutive_class", consec_class}});
            }
            out << arr.dump(2) << "\n";
            break;
        }
    }
    return out.str();
}

std::string cmd_classify(u64 n, Format format) {
    if (n < 2) throw std::invalid_argument("classify: N must be >= 2");
    const std::string diff2_class = to_string(classify_diff2(n));
    const std::string consec_class = to_string(classify_consecutive(n));
    const AliquotClass aliquot = aliquot_classify(n);
    const auto [diff2_count, consec_count] = predicted_counts(n);

    std::ostringstream out;
    switch (format) {
        case Format::Text:
            out << n << " = " << factorization_display(n) << "\n"
                << "diff2: " << diff2_class << "\n"
                << "consecutive: " << consec_class << "\n"
                << "aliquot: " << to_string(aliquot.kind) << " (excess " << aliquot.excess << ")\n"
                << "predicted counts: diff2 " << diff2_count << ", consecutive " << consec_count
                << "\n";
            break;
        case Format::Csv:
            out << "n,diff2_class,consecutive_class,aliquot_class,aliquot_excess,"
                   "diff2_count,consecutive_count\n"
                << n << "," << diff2_class << "," << consec_class << ","
                << to_string(aliquot.kind) << "," << aliquot.excess << "," << diff2_count << ","
                << consec_count << "\n";
            break;
        case Format::Json:
            out << json{{"n", n},
                        {"factorization", factorization_display(n)},
                        {"diff2_class", diff2_class},
                        {"consecutive_class", consec_class},
                        {"aliquot_class", to_string(aliquot.kind)},
                        {"aliquot_excess", aliquot.excess},
                        {"predicted_diff2_count", diff2_count},
                        {"predicted_consecutive_count", consec_count}}
                       .dump(2)
                << "\n";
            break;
    }
    return out.str();
}

std::string cmd_table(int id, Format format) {
    if (!is_known_table(id)) throw std::invalid_argument("unknown table id: " + std::to_string(id));
    const TableData t = table_data(id);

    std::ostringstream out;
    switch (format) {
        case Format::Text: {
            out << "table " << t.id << ": " << t.title << "\n";
            std::size_t number_width = 6;
            for (const auto& line : t.lines)
                number_width = std::max(number_width, utf8_width(line.number_display));
            for (const auto& col : t.key_columns) out << std::setw(5) << col << " ";
            out << pad_utf8("number", number_width) << "  sum\n";
            for (const auto& line : t.lines) {
                for (u64 key : line.keys) out << std::setw(5) << key << " ";
                out << pad_utf8(line.number_display, number_width) << "  "
                    << render_series_display(line.series) << "\n";
            }
            break;
        }
        case Format::Csv: {
            for (const auto& col : t.key_columns) out << col << ",";
            out << "number,first,last,terms\n";
            for (const auto& line : t.lines) {
                for (u64 key : line.keys) out << key << ",";
                out << line.number << "," << line.series.first << "," << line.series.last << ","
                    << line.series.terms << "\n";
            }
            break;
        }
        case Format::Json: {
            json rows = json::array();
            for (const auto& line : t.lines) {
                json row;
                for (std::size_t i = 0; i < t.key_columns.size(); ++i)
                    row[t.key_columns[i]] = line.keys[i];
                row["number"] = line.number;
                row["display"] = line.number_display;
                row["first"] = line.series.first;
                row["last"] = line.series.last;
                row["terms"] = line.series.terms;
                row["step"] = line.series.step;
                rows.push_back(row);
            }
            out << json{{"table", t.id}, {"title", t.title}, {"rows", rows}}.dump(2) << "\n";
            break;
        }
    }
    return out.str();
}

std::string cmd_appendix(u64 max_n, Format format) {
    if (max_n < 3) throw std::invalid_argument("appendix: max must be >= 3");
    const auto rows = appendix_rows(max_n);

    std::ostringstream out;
    switch (format) {
        case Format::Text: {
            std::size_t fact_width = 0;
            for (const auto& row : rows)
                fact_width = std::max(fact_width, utf8_width(row.factorization));
            for (const auto& row : rows) {
                out << std::setw(4) << row.n << "  " << pad_utf8(row.factorization, fact_width);
                if (!row.diff2.empty())
                    out << "  " << diff2_column_tag(row.diff2_class) << ": "
                        << join_series_displays(row.diff2);
                if (!row.consecutive.empty())
                    out << "  " << consecutive_column_tag(row.consecutive_class) << ": "
                        << join_series_displays(row.consecutive);
                out << "\n";
            }
            break;
        }
        case Format::Csv: {
            out << "n,factorization,column,first,last,terms\n";
            for (const auto& row : rows) {
                for (const auto& s : row.diff2)
                    out << row.n << "," << row.factorization << ","
                        << diff2_column_tag(row.diff2_class) << "," << s.first << "," << s.last
                        << "," << s.terms << "\n";
                for (const auto& s : row.consecutive)
                    out << row.n << "," << row.factorization << ","
                        << consecutive_column_tag(row.consecutive_class) << "," << s.first << ","
                        << s.last << "," << s.terms << "\n";
            }
            break;
        }
        case Format::Json: {
            json arr = json::array();
            for (const auto& row : rows) {
                arr.push_back(json{{"n", row.n},
                                   {"factorization", row.factorization},
                                   {"diff2_class", to_string(row.diff2_class)},
                                   {"diff2_column", diff2_column_tag(row.diff2_class)},
                                   {"diff2_series", series_list_to_json(row.diff2)},
                                   {"consecutive_class", to_string(row.consecutive_class)},
                                   {"consecutive_column",
                                    consecutive_column_tag(row.consecutive_class)},
                                   {"consecutive_series", series_list_to_json(row.consecutive)}});
            }
            out << arr.dump(2) << "\n";
            break;
        }
    }
    return out.str();
}

VerifyRendering cmd_verify(u64 from, u64 to, Format format) {
    if (from < 2 || from > to) throw std::invalid_argument("verify: requires 2 <= from <= to");
    const VerificationReport report = verify_range(from, to);

    std::ostringstream out;
    switch (format) {
        case Format::Text:
            out << "verify [" << report.lo << ", " << report.hi << "]: checked " << report.checked
                << ", mismatches " << report.mismatches.size() << ", elapsed "
                << report.elapsed_ms << " ms\n";
            for (const auto& m : report.mismatches)
                out << "  n=" << m.n << " " << m.kind << " expected " << m.expected << " actual "
                    << m.actual << "\n";
            out << (report.certified() ? "certified\n" : "NOT certified\n");
            break;
        case Format::Csv:
            out << "n,kind,expected,actual\n";
            for (const auto& m : report.mismatches)
                out << m.n << "," << m.kind << "," << m.expected << "," << m.actual << "\n";
            break;
        case Format::Json: {
            json arr = json::array();
            for (const auto& m : report.mismatches)
                arr.push_back(json{{"n", m.n},
                                   {"kind", m.kind},
                                   {"expected", m.expected},
                                   {"actual", m.actual}});
            out << json{{"lo", report.lo},
                        {"hi", report.hi},
                        {"checked", report.checked},
                        {"elapsed_ms", report.elapsed_ms},
                        {"certified", report.certified()},
                        {"mismatches", arr}}
                       .dump(2)
                << "\n";
            break;
        }
    }
    return {out.str(), report.certified()};
}

}  // namespace aseries
