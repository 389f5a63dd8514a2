#include <sstream>
#include <stdexcept>

#include "aseries/core_numbers.hpp"
#include "aseries/report.hpp"

namespace aseries {

Format parse_format(const std::string& name) {
    if (name == "text") return Format::Text;
    if (name == "csv") return Format::Csv;
    if (name == "json") return Format::Json;
    throw std::invalid_argument("unknown format: " + name);
}

std::string render_series_display(const ArithmeticSeries& s) {
    std::ostringstream out;
    if (s.terms <= 4) {
        for (u64 i = 0; i < s.terms; ++i) {
            if (i > 0) out << " + ";
            out << s.first + static_cast<u64>(s.step) * i;
        }
    } else {
        out << s.first << " + " << s.first + static_cast<u64>(s.step) << " + … + " << s.last;
    }
    out << " (" << s.terms << ")";
    return out.str();
}

std::string factorization_display(u64 n) {
    const Factorization f = factorize(n);
    if (f.factors.empty()) return "1";
    std::ostringstream out;
    bool first = true;
    for (const auto& [prime, exponent] : f.factors) {
        if (!first) out << "·";
        first = false;
        out << prime;
        if (exponent > 1) out << "^" << exponent;
    }
    return out.str();
}

std::string diff2_column_tag(Diff2Class c) {
    switch (c) {
        case Diff2Class::PrimeNone: return "";
        case Diff2Class::OddSumsOnly: return "1A";
        case Diff2Class::EvenSumsOnly: return "1B";
        case Diff2Class::Mixed: return "1C";
    }
    return "";
}

std::string consecutive_column_tag(ConsecutiveClass c) {
    switch (c) {
        case ConsecutiveClass::PowerOfTwoNone: return "";
        case ConsecutiveClass::OddLengthsOnly: return "2A";
        case ConsecutiveClass::SingleEvenLength: return "2B";
        case ConsecutiveClass::BothLengths: return "2C";
    }
    return "";
}

}  // namespace aseries
