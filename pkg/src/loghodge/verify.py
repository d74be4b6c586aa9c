"""Vanishing-strip and row predicates over bigraded tables.

The strip predicate checks that every non-zero entry (i, j) satisfies
0 <= j - i <= q + r, where q is the irregularity and r bounds the rank
(callers supply the pair; for group compactifications q = 0 and r is
the Cartan rank, for smooth complete toric varieties q = 0 and r = n).
The row predicate checks that row i = 0 is binomial, C(char_rank, j),
the dimension count of an exterior algebra on char_rank dlog classes;
with the full toric boundary removed char_rank is the torus dimension.

Failing checks are reported as data, never raised: a violated theorem
prediction is a result, and the CLI turns it into a non-zero exit code.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .table import BigradedTable


@dataclass(frozen=True)
class StripParams:
    """Irregularity q and rank bound r; the strip is 0 <= j - i <= q + r."""

    q: int
    r: int

    def __post_init__(self) -> None:
        if self.q < 0 or self.r < 0:
            raise ValueError("strip parameters must be non-negative")

    @property
    def width(self) -> int:
        return self.q + self.r


def strip_check(t: BigradedTable, p: StripParams) -> list[tuple[int, int, int]]:
    """Entries (i, j, dim) with dim > 0 outside the strip; empty means pass."""
    out = []
    for i, j, d in t.items_sorted():
        if not (0 <= j - i <= p.width):
            out.append((i, j, d))
    return out


@dataclass(frozen=True)
class RowCheckReport:
    """Comparison of table row i = 0 against binomial coefficients."""

    char_rank: int
    jmax: int
    mismatches: tuple[tuple[int, int, int], ...]  # (j, expected, actual)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def dlog_row_check(t: BigradedTable, char_rank: int) -> RowCheckReport:
    """Check entry (0, j) == C(char_rank, j) for j = 0..jmax.

    Requires the table to be complete through its declared jmax (true of
    every table the engine and the closed forms produce).
    """
    if t.jmax is None:
        raise ValueError("table has no declared jmax; cannot bound the row check")
    mismatches = []
    for j in range(t.jmax + 1):
        expected = comb(char_rank, j)
        actual = t.get(0, j)
        if expected != actual:
            mismatches.append((j, expected, actual))
    return RowCheckReport(char_rank, t.jmax, tuple(mismatches))
