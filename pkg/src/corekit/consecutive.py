"""Partitions avoiding two consecutive hook lengths t and t+1, distinct parts.

The beta-set of such a partition is a subset of {1, ..., t-1} with no two
consecutive members ("sparse subsets" below), which makes every statistic
Fibonacci-flavored: the count is F_{t+1}, the total size is the triple
Fibonacci convolution at t+1, and the largest size is floor(C(t+1,2)/3).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterator

from .partitions import Partition, partition_of_beta

NICE_SUBSET_CAP = 40
TABLE_CAP = 90


def fibonacci(i: int) -> int:
    """F_0 = 0, F_1 = 1, F_i = F_{i-1} + F_{i-2}."""
    if i < 0:
        raise ValueError(f"index must be >= 0, got {i}")
    a, b = 0, 1
    for _ in range(i):
        a, b = b, a + b
    return a


def iter_nice_subsets(t: int) -> Iterator[tuple[int, ...]]:
    """Subsets of {1,...,t-1} with no two consecutive members, in lex order.

    The empty set is included; it encodes the empty partition and the counts
    below only come out Fibonacci-exact with it.
    """
    if t < 2:
        raise ValueError(f"need t >= 2, got {t}")

    def walk(lo: int) -> Iterator[tuple[int, ...]]:
        yield ()
        for x in range(lo, t):
            for rest in walk(x + 2):
                yield (x, *rest)

    return walk(1)


def nice_subsets(t: int) -> list[tuple[int, ...]]:
    """Materialized :func:`iter_nice_subsets`; capped since growth is Fibonacci."""
    if t > NICE_SUBSET_CAP:
        raise ValueError(f"nice-subset enumeration capped at t = {NICE_SUBSET_CAP}")
    return list(iter_nice_subsets(t))


@lru_cache(maxsize=8)
def distinct_core_partitions(t: int) -> tuple[Partition, ...]:
    """All partitions with distinct parts avoiding hooks t and t+1.

    Built constructively from sparse subsets of {1,...,t-1} as beta-sets;
    sorted by (size, descending-lex parts).
    """
    partitions = [partition_of_beta(bs) for bs in nice_subsets(t)]
    partitions.sort(key=lambda p: (p.size, tuple(-part for part in p.parts)))
    return tuple(partitions)


def count_distinct_cores(t: int) -> int:
    """Closed form for ``len(distinct_core_partitions(t))``: F_{t+1}."""
    if t < 2:
        raise ValueError(f"need t >= 2, got {t}")
    return fibonacci(t + 1)


def largest_size(t: int) -> int:
    """Largest size among the partitions counted above: floor(C(t+1,2)/3)."""
    if t < 2:
        raise ValueError(f"need t >= 2, got {t}")
    return comb(t + 1, 2) // 3


def maximizer_count(t: int) -> int:
    """How many of them attain the largest size: 2 when t = 1 mod 3, else 1."""
    if t < 2:
        raise ValueError(f"need t >= 2, got {t}")
    return 2 if t % 3 == 1 else 1


def maximizers(t: int) -> list[Partition]:
    """The partitions attaining the largest size, constructed directly.

    Each has beta-set {t-1, t-3, ..., t-(2k-1)}; the admissible k depend on
    t mod 3 (both k and k+1 tie exactly when t = 1 mod 3).
    """
    if t < 2:
        raise ValueError(f"need t >= 2, got {t}")
    n, r = divmod(t, 3)
    ks = {0: [n], 1: [n, n + 1], 2: [n + 1]}[r]
    return [
        partition_of_beta(frozenset(t - (2 * i - 1) for i in range(1, k + 1)))
        for k in ks
    ]


def fibonacci_convolution(n: int) -> int:
    """Sum of F_i * F_j over ordered pairs i + j = n with i, j >= 1."""
    if n < 0:
        raise ValueError(f"index must be >= 0, got {n}")
    fib = _fib_table(n)
    return sum(fib[i] * fib[n - i] for i in range(1, n))


def fibonacci_triple_convolution(n: int) -> int:
    """Sum of F_i * F_j * F_k over ordered triples i + j + k = n, all >= 1."""
    if n < 0:
        raise ValueError(f"index must be >= 0, got {n}")
    fib = _fib_table(n)
    return sum(
        fib[i] * fib[j] * fib[n - i - j]
        for i in range(1, n - 1)
        for j in range(1, n - i)
    )


def _fib_table(n: int) -> list[int]:
    table = [0, 1]
    while len(table) <= n:
        table.append(table[-1] + table[-2])
    return table


def total_size(t: int) -> int:
    """Sum of sizes over all distinct-part partitions avoiding hooks t, t+1."""
    if t < 2:
        raise ValueError(f"need t >= 2, got {t}")
    return fibonacci_triple_convolution(t + 1)


def average_size(t: int) -> Fraction:
    """Average size as an exact reduced fraction (total over the F_{t+1} count)."""
    return Fraction(total_size(t), count_distinct_cores(t))


@dataclass(frozen=True)
class SequenceRow:
    """One row of the statistics ladder at a given t.

    a = number of sparse subsets; b, c, d = sums of |B|, |B|^2, sum(B) over
    them; e = d - (c - b)/2 = total partition size; phi and psi are the
    double and triple Fibonacci convolutions at t; fib = F_t.
    """

    t: int
    a: int
    b: int
    c: int
    d: int
    e: int
    phi: int
    psi: int
    fib: int


@dataclass(frozen=True)
class SequenceTable:
    rows: tuple[SequenceRow, ...]

    @property
    def t_max(self) -> int:
        return self.rows[-1].t

    def row(self, t: int) -> SequenceRow:
        return self.rows[t - 2]


def _definitional_bcd(t: int) -> tuple[int, int, int]:
    b = c = d = 0
    for subset in iter_nice_subsets(t):
        k = len(subset)
        b += k
        c += k * k
        d += sum(subset)
    return b, c, d


def sequence_table(t_max: int, *, definitional_limit: int = 25) -> SequenceTable:
    """Rows t = 2..t_max of the statistics ladder, recurrence-filled.

    b, c, d satisfy
        b_t = b_{t-1} + b_{t-2} + F_{t-1}
        c_t = c_{t-1} + c_{t-2} + 2 b_{t-2} + F_{t-1}
        d_t = d_{t-1} + d_{t-2} + (t-1) F_{t-1}
    (split each sparse subset of {1..t-1} on whether it contains t-1), and
    phi_t = phi_{t-1} + phi_{t-2} + F_{t-1}, psi_{t+1} = psi_t + psi_{t-1} + phi_t.

    Every row with t <= definitional_limit is additionally recomputed from
    scratch (subset sums and direct convolutions); a mismatch raises rather
    than returning a silently wrong table.
    """
    if not 2 <= t_max <= TABLE_CAP:
        raise ValueError(f"t_max must be in [2, {TABLE_CAP}], got {t_max}")

    fib = _fib_table(t_max + 2)
    b2, c2, d2 = _definitional_bcd(2)
    b3, c3, d3 = _definitional_bcd(3)
    b = {2: b2, 3: b3}
    c = {2: c2, 3: c3}
    d = {2: d2, 3: d3}
    phi = {2: fibonacci_convolution(2), 3: fibonacci_convolution(3)}
    psi = {2: fibonacci_triple_convolution(2), 3: fibonacci_triple_convolution(3)}
    for t in range(4, t_max + 2):
        b[t] = b[t - 1] + b[t - 2] + fib[t - 1]
        c[t] = c[t - 1] + c[t - 2] + 2 * b[t - 2] + fib[t - 1]
        d[t] = d[t - 1] + d[t - 2] + (t - 1) * fib[t - 1]
        phi[t] = phi[t - 1] + phi[t - 2] + fib[t - 1]
        psi[t] = psi[t - 1] + psi[t - 2] + phi[t - 1]

    rows = []
    for t in range(2, t_max + 1):
        diff = c[t] - b[t]
        if diff % 2:
            raise ArithmeticError(f"c_{t} - b_{t} = {diff} is odd; ladder is broken")
        row = SequenceRow(
            t=t,
            a=fib[t + 1],
            b=b[t],
            c=c[t],
            d=d[t],
            e=d[t] - diff // 2,
            phi=phi[t],
            psi=psi[t],
            fib=fib[t],
        )
        if t <= definitional_limit:
            db, dc, dd = _definitional_bcd(t)
            direct = (db, dc, dd, fibonacci_convolution(t), fibonacci_triple_convolution(t))
            laddered = (row.b, row.c, row.d, row.phi, row.psi)
            if direct != laddered:
                raise ArithmeticError(
                    f"recurrence/definitional mismatch at t = {t}: "
                    f"{laddered} vs {direct}"
                )
        rows.append(row)
    return SequenceTable(tuple(rows))
