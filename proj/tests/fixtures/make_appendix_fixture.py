#!/usr/bin/env python3
"""Regenerates appendix_corrected.csv by direct enumeration.

Deliberately shares no code with the C++ tree: series are found by solving
the sum identities for every term count, factorizations come from sympy, and
the column tags are read off the parities observed in the enumeration. The
output must match `aseries appendix --max 100 --format csv` byte for byte.
"""

from pathlib import Path

import sympy


def step2_series(n):
    """(first, last, terms) for every difference-2 sum equal to n."""
    out = []
    r = 2
    while r * r <= n:
        if n % r == 0:
            first = n // r - (r - 1)
            out.append((first, first + 2 * (r - 1), r))
        r += 1
    return out


def step1_series(n):
    """(first, last, terms) for every difference-1 sum equal to n."""
    out = []
    r = 2
    while r * (r + 1) // 2 <= n:
        rest = n - r * (r - 1) // 2
        if rest % r == 0:
            first = rest // r
            out.append((first, first + r - 1, r))
        r += 1
    out.sort(key=lambda s: (s[2], s[0]))
    return out


def factorization_display(n):
    parts = []
    for prime, exponent in sorted(sympy.factorint(n).items()):
        parts.append(f"{prime}^{exponent}" if exponent > 1 else str(prime))
    return "·".join(parts)


def diff2_tag(series):
    if not series:
        return ""
    parities = {first % 2 for first, _, _ in series}
    if parities == {1}:
        return "1A"
    if parities == {0}:
        return "1B"
    return "1C"


def consecutive_tag(series):
    if not series:
        return ""
    parities = {terms % 2 for _, _, terms in series}
    if parities == {1}:
        return "2A"
    if parities == {0}:
        assert len(series) == 1, "multiple all-even-length sums should be impossible"
        return "2B"
    return "2C"


def main():
    lines = ["n,factorization,column,first,last,terms"]
    for n in range(3, 101):
        fact = factorization_display(n)
        diff2 = step2_series(n)
        consecutive = step1_series(n)
        tag2, tag1 = diff2_tag(diff2), consecutive_tag(consecutive)
        for first, last, terms in diff2:
            lines.append(f"{n},{fact},{tag2},{first},{last},{terms}")
        for first, last, terms in consecutive:
            lines.append(f"{n},{fact},{tag1},{first},{last},{terms}")
    target = Path(__file__).parent / "appendix_corrected.csv"
    target.write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"wrote {target} ({len(lines) - 1} series lines)")


if __name__ == "__main__":
    main()
