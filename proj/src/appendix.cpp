#include <sstream>
#include <stdexcept>

#include "aseries/report.hpp"
#include "aseries/series_consecutive.hpp"
#include "aseries/series_diff2.hpp"

namespace aseries {

std::vector<AppendixRow> appendix_rows(u64 max_n) {
    if (max_n < 3) throw std::invalid_argument("appendix_rows: max_n must be >= 3");
    std::vector<AppendixRow> rows;
    rows.reserve(max_n - 2);
    for (u64 n = 3; n <= max_n; ++n) {
        AppendixRow row;
        row.n = n;
        row.factorization = factorization_display(n);
        row.diff2_class = classify_diff2(n);
        row.diff2 = representations_diff2(n);
        row.consecutive_class = classify_consecutive(n);
        row.consecutive = representations_consecutive(n);

        // Certification gate: nothing is rendered that the brute-force
        // enumeration does not confirm.
        if (row.diff2 != enumerate_series(n, 2) || row.consecutive != enumerate_series(n, 1)) {
            std::ostringstream msg;
            msg << "appendix_rows: oracle rejected the series of " << n;
            throw std::logic_error(msg.str());
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace aseries
