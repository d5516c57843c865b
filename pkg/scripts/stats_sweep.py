#!/usr/bin/env python3
"""Print the consecutive-pair statistics table for a range of t.

Usage: python scripts/stats_sweep.py [T_MAX]

Columns: count F_(t+1), largest size, number of maximizers, total size,
average size (exact), average size (5 decimal places).
"""

import sys

from corekit import (
    average_size,
    count_distinct_cores,
    largest_size,
    maximizer_count,
    total_size,
)


def main() -> int:
    t_max = int(sys.argv[1]) if len(sys.argv) > 1 else 20
    header = f"{'t':>4} {'count':>12} {'largest':>8} {'#max':>5} {'total':>14} {'average':>18} {'~avg':>12}"
    print(header)
    print("-" * len(header))
    for t in range(2, t_max + 1):
        avg = average_size(t)
        print(
            f"{t:>4} {count_distinct_cores(t):>12} {largest_size(t):>8} "
            f"{maximizer_count(t):>5} {total_size(t):>14} {str(avg):>18} "
            f"{float(avg):>12.5f}"
        )
    return 0


if __name__ == "__main__":
    sys.exit(main())
