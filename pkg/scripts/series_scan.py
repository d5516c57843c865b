#!/usr/bin/env python3
"""Compare the three series routes side by side for one modulus.

Usage: python scripts/series_scan.py [T] [LIMIT]

Prints one row per coefficient with the vector-search value, the brute-force
value, and (for t = 2, 3, 4) the closed-form value; exits nonzero on any
disagreement.
"""

import sys

from corekit import (
    distinct_core_series,
    distinct_core_series_brute,
    distinct_core_series_closed,
)


def main() -> int:
    t = int(sys.argv[1]) if len(sys.argv) > 1 else 4
    limit = int(sys.argv[2]) if len(sys.argv) > 2 else 40
    search = distinct_core_series(t, limit).coeffs
    brute = distinct_core_series_brute(t, limit).coeffs
    closed = distinct_core_series_closed(t, limit).coeffs if t in (2, 3, 4) else None

    print(f"{'n':>4} {'search':>8} {'brute':>8}" + (f" {'closed':>8}" if closed else ""))
    disagreements = 0
    for n in range(limit + 1):
        row = f"{n:>4} {search[n]:>8} {brute[n]:>8}"
        if closed:
            row += f" {closed[n]:>8}"
        values = {search[n], brute[n]} | ({closed[n]} if closed else set())
        if len(values) > 1:
            row += "   <-- disagreement"
            disagreements += 1
        print(row)
    print(f"total counted up to {limit}: {sum(search)}")
    return 1 if disagreements else 0


if __name__ == "__main__":
    sys.exit(main())
