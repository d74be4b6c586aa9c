"""Front-end for equivariant compactifications of reductive groups.

Everything is keyed on the Cartan type alone: the classical fundamental
invariant degrees d_1 <= ... <= d_r determine both the closed-form
bigraded table (a free exterior algebra on generators of bidegrees
(d_k - 1, d_k)) and, for small types, an explicit presentation of the
graph-of-the-adjoint-action coordinate ring fed to the Koszul engine
for cross-validation.  Isogenous forms of the same type share their
invariant degrees, so nothing here distinguishes them.

Explicit invariant polynomials are provided for Torus_r, A1 and A2
only; that is enough to cross-validate the engine at desk scale, and
the generated polynomials are fixed bit for bit (sl3 is parametrised by
the eight matrix entries x11 x12 x13 x21 x22 x23 x31 x32 with
x33 = -x11 - x22 substituted before expansion).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import factorial

from .gralg import GradedRing, IdealPresentation, Monomial, poly_add, poly_mul, poly_scale
from .table import BigradedTable


class UnsupportedTypeError(ValueError):
    """Raised for Cartan types without an explicit ideal presentation."""


_SERIES = ("A", "B", "C", "D", "E", "F", "G", "Torus")


@dataclass(frozen=True)
class CartanType:
    series: str
    rank: int

    def __post_init__(self) -> None:
        if self.series not in _SERIES:
            raise ValueError(f"unknown series {self.series!r}; expected one of {_SERIES}")
        r = self.rank
        ok = (
            (self.series == "A" and r >= 1)
            or (self.series in ("B", "C") and r >= 1)
            or (self.series == "D" and r >= 3)
            or (self.series == "E" and r in (6, 7, 8))
            or (self.series == "F" and r == 4)
            or (self.series == "G" and r == 2)
            or (self.series == "Torus" and r >= 1)
        )
        if not ok:
            raise ValueError(f"invalid rank {r} for series {self.series}")

    def __str__(self) -> str:
        return ("T" if self.series == "Torus" else self.series) + str(self.rank)


def parse_cartan_type(s: str) -> CartanType:
    """Parse "A1".."E8" or "T1".."T9" (case-insensitive)."""
    t = s.strip().upper()
    if len(t) < 2 or t[0] not in "ABCDEFGT" or not t[1:].isdigit():
        raise ValueError(f"cannot parse Cartan type {s!r} (expected e.g. A2, G2, T3)")
    series = "Torus" if t[0] == "T" else t[0]
    rank = int(t[1:])
    if series == "Torus" and not (1 <= rank <= 9):
        raise ValueError(f"torus types range over T1..T9, got {s!r}")
    return CartanType(series, rank)


@dataclass(frozen=True)
class InvariantDegrees:
    """Sorted degrees of the fundamental invariants."""

    degrees: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(d < 1 for d in self.degrees):
            raise ValueError("degrees must be positive")
        if list(self.degrees) != sorted(self.degrees):
            raise ValueError("degrees must be sorted ascending")

    @property
    def rank(self) -> int:
        return len(self.degrees)


_EXCEPTIONAL_DEGREES = {
    ("G", 2): (2, 6),
    ("F", 4): (2, 6, 8, 12),
    ("E", 6): (2, 5, 6, 8, 9, 12),
    ("E", 7): (2, 6, 8, 10, 12, 14, 18),
    ("E", 8): (2, 8, 12, 14, 18, 20, 24, 30),
}


def invariant_degrees(t: CartanType) -> InvariantDegrees:
    """Classical fundamental-degree table per series."""
    r = t.rank
    if t.series == "Torus":
        degs = (1,) * r
    elif t.series == "A":
        degs = tuple(range(2, r + 2))
    elif t.series in ("B", "C"):
        degs = tuple(2 * k for k in range(1, r + 1))
    elif t.series == "D":
        degs = tuple(sorted([2 * k for k in range(1, r)] + [r]))
    else:
        degs = _EXCEPTIONAL_DEGREES[(t.series, r)]
    return InvariantDegrees(degs)


def weyl_order(t: CartanType) -> int:
    """Order of the Weyl group; must equal the product of the degrees."""
    r = t.rank
    if t.series == "Torus":
        return 1
    if t.series == "A":
        return factorial(r + 1)
    if t.series in ("B", "C"):
        return 2**r * factorial(r)
    if t.series == "D":
        return 2 ** (r - 1) * factorial(r)
    return {("G", 2): 12, ("F", 4): 1152, ("E", 6): 51840, ("E", 7): 2903040, ("E", 8): 696729600}[(t.series, r)]


def positive_root_count(t: CartanType) -> int:
    """Number of positive roots; must equal sum(d_k - 1)."""
    r = t.rank
    if t.series == "Torus":
        return 0
    if t.series == "A":
        return r * (r + 1) // 2
    if t.series in ("B", "C"):
        return r * r
    if t.series == "D":
        return r * (r - 1)
    return {("G", 2): 6, ("F", 4): 24, ("E", 6): 36, ("E", 7): 63, ("E", 8): 120}[(t.series, r)]


def closed_form_table(d: InvariantDegrees, j_max: int | None = None) -> BigradedTable:
    """Expansion of prod_k (1 + u^{d_k - 1} v^{d_k}).

    Entry (i, j) counts the subsets K of the degree list with
    sum_{k in K} (d_k - 1) = i and sum_{k in K} d_k = j; restricted to
    j <= j_max when given.
    """
    full = sum(d.degrees)
    jmax = full if j_max is None else j_max
    entries: dict[tuple[int, int], int] = {}
    for size in range(d.rank + 1):
        for K in combinations(d.degrees, size):
            j = sum(K)
            if j > jmax:
                continue
            i = j - size
            entries[(i, j)] = entries.get((i, j), 0) + 1
    return BigradedTable(
        entries,
        source="closed-form",
        jmax=jmax,
        strip=(0, d.rank),
    )


def _unit_mono(n: int, i: int) -> dict[Monomial, Fraction]:
    e = [0] * n
    e[i] = 1
    return {tuple(e): Fraction(1)}


def _matrix_trace_power(entries, power: int, nvars: int) -> dict[Monomial, Fraction]:
    """Trace of the p-th power of a small matrix of polynomial entries."""
    size = len(entries)
    current = entries
    for _ in range(power - 1):
        nxt = [[{} for _ in range(size)] for _ in range(size)]
        for i in range(size):
            for j in range(size):
                acc: dict[Monomial, Fraction] = {}
                for k in range(size):
                    acc = poly_add(acc, poly_mul(current[i][k], entries[k][j]))
                nxt[i][j] = acc
        current = nxt
    trace: dict[Monomial, Fraction] = {}
    for i in range(size):
        trace = poly_add(trace, current[i][i])
    return trace


def _sl3_entries(nvars: int, offset: int):
    """Traceless 3x3 matrix over the variables offset..offset+7, with the
    (3,3) entry substituted as -x11 - x22."""
    v = [_unit_mono(nvars, offset + k) for k in range(8)]
    x33 = poly_add(poly_scale(v[0], -1), poly_scale(v[4], -1))
    return [
        [v[0], v[1], v[2]],
        [v[3], v[4], v[5]],
        [v[6], v[7], x33],
    ]


def graph_ideal(t: CartanType) -> IdealPresentation:
    """Presentation of the graph-of-the-adjoint-action coordinate ring:
    two copies of the Lie-algebra coordinates, one generator
    P_k(x) - P_k(y) per fundamental invariant.

    Supported: Torus_r (2r variables, generators x_k - y_k), A1 (six
    variables a b c a' b' c' with the quadratic Casimir a^2 + bc) and A2
    (sixteen sl3 coordinates with the trace-power invariants of degrees
    2 and 3).  Any non-degenerate invariant normalisation gives the same
    homology table.
    """
    if t.series == "Torus":
        r = t.rank
        ring = GradedRing.standard(2 * r)
        gens = []
        for k in range(r):
            g = poly_add(_unit_mono(2 * r, k), poly_scale(_unit_mono(2 * r, r + k), -1))
            gens.append(g)
        return IdealPresentation.make(ring, gens)
    if t.series == "A" and t.rank == 1:
        ring = GradedRing.standard(6)
        kappa_x = poly_add(poly_mul(_unit_mono(6, 0), _unit_mono(6, 0)),
                           poly_mul(_unit_mono(6, 1), _unit_mono(6, 2)))
        kappa_y = poly_add(poly_mul(_unit_mono(6, 3), _unit_mono(6, 3)),
                           poly_mul(_unit_mono(6, 4), _unit_mono(6, 5)))
        return IdealPresentation.make(ring, [poly_add(kappa_x, poly_scale(kappa_y, -1))])
    if t.series == "A" and t.rank == 2:
        nvars = 16
        ring = GradedRing.standard(nvars)
        xm = _sl3_entries(nvars, 0)
        ym = _sl3_entries(nvars, 8)
        gens = []
        for power in (2, 3):
            gx = _matrix_trace_power(xm, power, nvars)
            gy = _matrix_trace_power(ym, power, nvars)
            gens.append(poly_add(gx, poly_scale(gy, -1)))
        return IdealPresentation.make(ring, gens)
    raise UnsupportedTypeError(
        f"no explicit presentation for {t}; supported types: T1..T9, A1, A2"
    )


def dlog_row_rank(t: CartanType) -> int:
    """Rank of the group of characters trivial on the open-orbit isotropy:
    r for Torus_r, 0 for semisimple types."""
    return t.rank if t.series == "Torus" else 0
