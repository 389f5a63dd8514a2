// Brute-force ground truth. enumerate_series inverts the sum identities
//   step 2:  n = r * (first + r - 1)        (r terms, difference 2)
//   step 1:  n = r * first + r*(r-1)/2      (r terms, difference 1)
// by iterating the term count r and solving for the first term, keeping
// integral solutions >= 1. It calls neither the factorizer nor the
// generators; that independence is the point.
#pragma once

#include <string>
#include <vector>

#include "aseries/types.hpp"

namespace aseries {

std::vector<ArithmeticSeries> enumerate_series(u64 n, int step);

struct Mismatch {
    u64 n = 0;
    std::string kind;      // which comparison failed, e.g. "diff2_set"
    std::string expected;  // oracle's view
    std::string actual;    // generator / classifier view

    friend bool operator==(const Mismatch&, const Mismatch&) = default;
};

// Cross-checks one integer: generator outputs against the oracle enumeration,
// classifications against the parities/lengths the oracle actually saw, and
// predicted counts against oracle counts. Empty on full agreement.
std::vector<Mismatch> verify_number(u64 n);

struct VerificationReport {
    u64 lo = 0;
    u64 hi = 0;
    u64 checked = 0;
    std::vector<Mismatch> mismatches;
    i64 elapsed_ms = 0;

    bool certified() const { return mismatches.empty(); }
};

// verify_number over [lo, hi], fanned out across hardware threads in chunks;
// mismatches are re-sorted by n so the output is schedule-independent.
VerificationReport verify_range(u64 lo, u64 hi);

}  // namespace aseries
