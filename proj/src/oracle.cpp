#include "aseries/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "aseries/classifier.hpp"
#include "aseries/series_consecutive.hpp"
#include "aseries/series_diff2.hpp"

namespace aseries {

std::vector<ArithmeticSeries> enumerate_series(u64 n, int step) {
    if (n < 2) throw std::invalid_argument("enumerate_series: n must be >= 2");
    if (step != 1 && step != 2) throw std::invalid_argument("enumerate_series: step must be 1 or 2");
    std::vector<ArithmeticSeries> found;
    if (step == 2) {
        // r terms starting at a: sum = r*a + r*(r-1). Minimal sum (a = 1) is r^2.
        for (u64 r = 2; r <= n / r; ++r) {
            if (n % r != 0) continue;
            u64 a = n / r - (r - 1);  // n/r >= r, so a >= 1
            found.push_back(make_series(a, 2, r));
        }
    } else {
        // r terms starting at a: sum = r*a + r*(r-1)/2. Minimal sum is r*(r+1)/2.
        for (u64 r = 2; r * (r + 1) / 2 <= n; ++r) {
            u64 rest = n - r * (r - 1) / 2;
            if (rest % r != 0) continue;
            found.push_back(make_series(rest / r, 1, r));
        }
    }
    return found;  // ascending by term count, by construction
}

namespace {

// Comma-free so mismatch rows stay CSV-safe.
std::string series_set_display(const std::vector<ArithmeticSeries>& list) {
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < list.size(); ++i) {
        if (i > 0) out << " ";
        out << "(" << list[i].first << ":" << list[i].terms << ")";
    }
    out << "]";
    return out.str();
}

// The classification the oracle's raw output implies for step 2.
std::string observed_diff2(const std::vector<ArithmeticSeries>& list) {
    if (list.empty()) return to_string(Diff2Class::PrimeNone);
    bool odd = false, even = false;
    for (const auto& s : list) (s.first % 2 == 1 ? odd : even) = true;
    if (odd && even) return to_string(Diff2Class::Mixed);
    return to_string(odd ? Diff2Class::OddSumsOnly : Diff2Class::EvenSumsOnly);
}

// The classification the oracle's raw output implies for step 1.
std::string observed_consecutive(const std::vector<ArithmeticSeries>& list) {
    if (list.empty()) return to_string(ConsecutiveClass::PowerOfTwoNone);
    bool odd_len = false, even_len = false;
    for (const auto& s : list) (s.terms % 2 == 1 ? odd_len : even_len) = true;
    if (odd_len && even_len) return to_string(ConsecutiveClass::BothLengths);
    if (odd_len) return to_string(ConsecutiveClass::OddLengthsOnly);
    return list.size() == 1 ? to_string(ConsecutiveClass::SingleEvenLength)
                            : "MultipleEvenLengths";
}

}  // namespace

std::vector<Mismatch> verify_number(u64 n) {
    std::vector<Mismatch> out;
    const auto oracle2 = enumerate_series(n, 2);
    const auto oracle1 = enumerate_series(n, 1);
    const auto gen2 = representations_diff2(n);
    const auto gen1 = representations_consecutive(n);

    if (gen2 != oracle2)
        out.push_back({n, "diff2_set", series_set_display(oracle2), series_set_display(gen2)});
    if (gen1 != oracle1)
        out.push_back({n, "consecutive_set", series_set_display(oracle1), series_set_display(gen1)});

    const std::string diff2_class = to_string(classify_diff2(n));
    const std::string diff2_seen = observed_diff2(oracle2);
    if (diff2_class != diff2_seen) out.push_back({n, "diff2_class", diff2_seen, diff2_class});

    const std::string consec_class = to_string(classify_consecutive(n));
    const std::string consec_seen = observed_consecutive(oracle1);
    if (consec_class != consec_seen)
        out.push_back({n, "consecutive_class", consec_seen, consec_class});

    const auto [pred2, pred1] = predicted_counts(n);
    if (pred2 != oracle2.size())
        out.push_back({n, "diff2_count", std::to_string(oracle2.size()), std::to_string(pred2)});
    if (pred1 != oracle1.size())
        out.push_back({n, "consecutive_count", std::to_string(oracle1.size()), std::to_string(pred1)});
    return out;
}

VerificationReport verify_range(u64 lo, u64 hi) {
    if (lo < 2 || lo > hi) throw std::invalid_argument("verify_range: requires 2 <= lo <= hi");
    const auto start = std::chrono::steady_clock::now();

    const u64 total = hi - lo + 1;
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const u64 chunk = std::max<u64>(256, (total + hw - 1) / hw);

    std::vector<std::future<std::vector<Mismatch>>> futures;
    for (u64 begin = lo; begin <= hi; begin += chunk) {
        const u64 end = std::min(hi, begin + chunk - 1);
        futures.push_back(std::async(std::launch::async, [begin, end] {
            std::vector<Mismatch> found;
            for (u64 n = begin; n <= end; ++n) {
                auto m = verify_number(n);
                found.insert(found.end(), m.begin(), m.end());
            }
            return found;
        }));
    }

    VerificationReport report;
    report.lo = lo;
    report.hi = hi;
    report.checked = total;
    for (auto& f : futures) {
        auto part = f.get();
        report.mismatches.insert(report.mismatches.end(), part.begin(), part.end());
    }
    std::stable_sort(report.mismatches.begin(), report.mismatches.end(),
                     [](const Mismatch& a, const Mismatch& b) { return a.n < b.n; });

    report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    return report;
}

}  // namespace aseries
