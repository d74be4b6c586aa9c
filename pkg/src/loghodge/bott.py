"""Closed-form cohomology of twisted differential forms on projective space.

For P^n, the bundle of j-forms twisted by O(k) has cohomology in at
most one degree:

    i = 0 (k > j):      C(k + n - j, k) * C(k - 1, j)
    i = j (k = 0):      1
    i = n (k < j - n):  C(j - k, -k) * C(-k - 1, n - j)

and zero otherwise.  Flag-variety vanishing for nef twists (here q = r
= 0, so non-vanishing forces i <= j) is scanned exhaustively by
`broer_check`.  Only projective space is covered: quadrics and
grassmannians genuinely violate the naive i >= 1 vanishing and need
different machinery, which is out of scope by design.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb


@dataclass(frozen=True)
class BottQuery:
    """P^n, form degree j, twist k."""

    n: int
    j: int
    k: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if not (0 <= self.j <= self.n):
            raise ValueError(f"form degree j={self.j} out of range 0..{self.n}")


def bott_dims(q: BottQuery) -> dict[int, int]:
    """Cohomology dimensions as a map i -> dim, zeros omitted."""
    n, j, k = q.n, q.j, q.k
    if k > j:
        return {0: comb(k + n - j, k) * comb(k - 1, j)}
    if k == 0:
        return {j: 1}
    if k < j - n:
        return {n: comb(j - k, -k) * comb(-k - 1, n - j)}
    return {}


@dataclass(frozen=True)
class BroerReport:
    """Scan of H^i(P^n, Omega^j(k)) over a twist range.

    `violations` collects non-vanishing with i > j at k >= 0 (expected
    empty: nef twists on a flag variety vanish above the form degree);
    `negative_twist_nonvanishing` lists all non-zero groups found at
    k < 0 as context, since for negative twists vanishing above the form
    degree genuinely fails.
    """

    n: int
    k_min: int
    k_max: int
    violations: tuple[tuple[int, int, int, int], ...]  # (i, j, k, dim)
    negative_twist_nonvanishing: tuple[tuple[int, int, int, int], ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def broer_check(n: int, k_min: int, k_max: int) -> BroerReport:
    """Exhaustively scan all (i, j, k) with 0 <= j <= n, k_min <= k <= k_max."""
    if k_min > k_max:
        raise ValueError("empty twist range")
    violations = []
    context = []
    for k in range(k_min, k_max + 1):
        for j in range(n + 1):
            dims = bott_dims(BottQuery(n, j, k))
            for i, d in sorted(dims.items()):
                if k >= 0 and i > j:
                    violations.append((i, j, k, d))
                if k < 0:
                    context.append((i, j, k, d))
    return BroerReport(n, k_min, k_max, tuple(violations), tuple(context))
