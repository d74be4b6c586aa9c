"""Exact sparse linear algebra over arbitrary-precision rationals.

Everything downstream (quotient algebras, Koszul homology, Chow
presentations) reduces to ranks, cokernel dimensions and reduced row
echelon forms of sparse matrices over Q.  Floating point is forbidden
throughout: all arithmetic is `fractions.Fraction` at the interface and
gcd-normalised big integers inside the elimination kernels, so results
are exact and deterministic across runs.

Conventions:
  * matrices are immutable, stored as sorted sparse (row, col, value)
    triples with no explicit zeros;
  * `pivot_columns` scans columns left to right (the pivot set of the
    reduced row echelon form), so callers control basis selection purely
    through column order;
  * `rank` is free to pick pivots in any order (the value is basis
    independent) and uses a fill-reducing strategy.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping, Sequence


class MatrixFormatError(ValueError):
    """Raised for out-of-range indices, duplicate keys or stored zeros."""


Entry = tuple[int, int, Fraction]


@dataclass(frozen=True)
class RatMatrix:
    """Immutable sparse matrix over Q.

    `entries` holds (row, col, value) triples sorted by (row, col) with
    all values non-zero; `nrows`/`ncols` may exceed the occupied range
    (empty rows and columns are meaningful).
    """

    nrows: int
    ncols: int
    entries: tuple[Entry, ...]

    def __post_init__(self) -> None:
        if self.nrows < 0 or self.ncols < 0:
            raise MatrixFormatError("negative matrix dimensions")
        prev = None
        for r, c, v in self.entries:
            if not (0 <= r < self.nrows and 0 <= c < self.ncols):
                raise MatrixFormatError(f"entry ({r},{c}) out of bounds for {self.nrows}x{self.ncols}")
            if v == 0:
                raise MatrixFormatError(f"stored zero at ({r},{c})")
            if prev is not None and (r, c) <= prev:
                raise MatrixFormatError(f"entries not sorted / duplicate key at ({r},{c})")
            prev = (r, c)

    @classmethod
    def from_entries(cls, nrows: int, ncols: int, items: Iterable[tuple[int, int, object]]) -> "RatMatrix":
        """Build from (row, col, value) items; values are coerced to Fraction,
        duplicates rejected, zeros dropped."""
        seen: dict[tuple[int, int], Fraction] = {}
        for r, c, v in items:
            key = (r, c)
            if key in seen:
                raise MatrixFormatError(f"duplicate entry at {key}")
            fv = Fraction(v)
            if fv != 0:
                seen[key] = fv
        ordered = tuple((r, c, seen[(r, c)]) for r, c in sorted(seen))
        return cls(nrows, ncols, ordered)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[object]], ncols: int | None = None) -> "RatMatrix":
        """Build from a dense list of row lists."""
        nrows = len(rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        items = []
        for r, row in enumerate(rows):
            if len(row) != ncols:
                raise MatrixFormatError("ragged rows")
            for c, v in enumerate(row):
                items.append((r, c, v))
        return cls.from_entries(nrows, ncols, items)

    @classmethod
    def zero(cls, nrows: int, ncols: int) -> "RatMatrix":
        return cls(nrows, ncols, ())

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls(n, n, tuple((i, i, Fraction(1)) for i in range(n)))

    def to_rows(self) -> list[list[Fraction]]:
        dense = [[Fraction(0)] * self.ncols for _ in range(self.nrows)]
        for r, c, v in self.entries:
            dense[r][c] = v
        return dense

    def row_dicts(self) -> list[dict[int, Fraction]]:
        rows: list[dict[int, Fraction]] = [{} for _ in range(self.nrows)]
        for r, c, v in self.entries:
            rows[r][c] = v
        return rows

    def col_dicts(self) -> list[dict[int, Fraction]]:
        cols: list[dict[int, Fraction]] = [{} for _ in range(self.ncols)]
        for r, c, v in self.entries:
            cols[c][r] = v
        return cols

    def transpose(self) -> "RatMatrix":
        items = tuple((c, r, v) for r, c, v in self.entries)
        return RatMatrix(self.ncols, self.nrows, tuple(sorted(items)))

    def is_zero(self) -> bool:
        return not self.entries

    @property
    def nnz(self) -> int:
        return len(self.entries)

    def __matmul__(self, other: "RatMatrix") -> "RatMatrix":
        if self.ncols != other.nrows:
            raise MatrixFormatError(f"shape mismatch {self.nrows}x{self.ncols} @ {other.nrows}x{other.ncols}")
        left_cols = self.col_dicts()
        items: list[tuple[int, int, Fraction]] = []
        acc: dict[int, Fraction] = {}
        # column j of the product is a combination of left columns
        other_cols = other.col_dicts()
        for j, col in enumerate(other_cols):
            acc.clear()
            for r, v in col.items():
                for i, w in left_cols[r].items():
                    acc[i] = acc.get(i, Fraction(0)) + v * w
            for i, val in acc.items():
                if val != 0:
                    items.append((i, j, val))
        return RatMatrix(self.nrows, other.ncols, tuple(sorted(items)))


def _scaled_int_rows(m: RatMatrix) -> list[dict[int, int]]:
    """Rows as primitive integer dicts (denominators cleared, gcd divided out)."""
    rows: list[dict[int, Fraction]] = m.row_dicts()
    out: list[dict[int, int]] = []
    for row in rows:
        if not row:
            continue
        lcm = 1
        for v in row.values():
            d = v.denominator
            lcm = lcm // gcd(lcm, d) * d
        ints = {c: int(v * lcm) for c, v in row.items()}
        g = 0
        for v in ints.values():
            g = gcd(g, v)
        if g > 1:
            ints = {c: v // g for c, v in ints.items()}
        out.append(ints)
    return out


def _combine(row: dict[int, int], pivot_row: dict[int, int], col: int) -> dict[int, int]:
    """Cancel `col` from `row` using `pivot_row` (integer cross-multiplication,
    gcd-normalised).  Returns the new row dict."""
    pv = pivot_row[col]
    rv = row[col]
    g0 = gcd(pv, rv)
    a = pv // g0
    b = rv // g0
    new = {c: a * v for c, v in row.items()}
    for c, v in pivot_row.items():
        w = new.get(c, 0) - b * v
        if w:
            new[c] = w
        else:
            new.pop(c, None)
    g = 0
    for v in new.values():
        g = gcd(g, v)
        if g == 1:
            break
    if g > 1:
        new = {c: v // g for c, v in new.items()}
    return new


def _rank_int_rows(rows: list[dict[int, int]]) -> int:
    """Rank by sparse elimination with a fewest-entries-column pivot heap.

    Pivot order does not affect the result; the heap keeps fill-in low on
    the boundary-map-like matrices this package produces.
    """
    live = {i: r for i, r in enumerate(rows) if r}
    col_rows: dict[int, set] = {}
    for i, r in live.items():
        for c in r:
            col_rows.setdefault(c, set()).add(i)
    heap = [(len(s), c) for c, s in col_rows.items()]
    heapq.heapify(heap)
    rank = 0

    def retire(i: int) -> None:
        for c in live[i]:
            s = col_rows.get(c)
            if s is not None:
                s.discard(i)
                if not s:
                    del col_rows[c]
        del live[i]

    while heap:
        cnt, col = heapq.heappop(heap)
        s = col_rows.get(col)
        if not s:
            continue
        if len(s) != cnt:
            heapq.heappush(heap, (len(s), col))
            continue
        # pivot row: shortest, then lowest id, for reproducible fill patterns
        pi = min(s, key=lambda i: (len(live[i]), i))
        pivot_row = live[pi]
        rank += 1
        others = sorted(s - {pi})
        retire(pi)
        touched: set[int] = set()
        for ri in others:
            row = live[ri]
            old_cols = set(row)
            new = _combine(row, pivot_row, col)
            if new:
                live[ri] = new
                new_cols = set(new)
            else:
                new_cols = set()
                retire(ri)
            for c in old_cols - new_cols:
                sc = col_rows.get(c)
                if sc is not None:
                    sc.discard(ri)
                    if not sc:
                        del col_rows[c]
                    else:
                        touched.add(c)
            for c in new_cols - old_cols:
                col_rows.setdefault(c, set()).add(ri)
                touched.add(c)
            if new:
                live[ri] = new
        for c in touched:
            sc = col_rows.get(c)
            if sc:
                heapq.heappush(heap, (len(sc), c))
    return rank


def rank(m: RatMatrix) -> int:
    """Exact rank over Q."""
    return _rank_int_rows(_scaled_int_rows(m))


def cokernel_dim(m: RatMatrix) -> int:
    """ncols - rank: the dimension of the column space's complement.

    Columns index generators and rows index relations, so this is the
    dimension of (generators) / (span of relation rows).
    """
    return m.ncols - rank(m)


def pivot_columns(m: RatMatrix) -> list[int]:
    """Pivot columns of the reduced row echelon form, scanning left to right.

    Deterministic given the caller's column order; equals the greedy
    lexicographically-first maximal independent column set.
    """
    rows = _scaled_int_rows(m)
    live = {i: r for i, r in enumerate(rows) if r}
    col_rows: dict[int, set] = {}
    for i, r in live.items():
        for c in r:
            col_rows.setdefault(c, set()).add(i)
    pivots: list[int] = []
    for col in sorted(col_rows):
        s = col_rows.get(col)
        if not s:
            continue
        pi = min(s, key=lambda i: (len(live[i]), i))
        pivot_row = live.pop(pi)
        for c in pivot_row:
            sc = col_rows.get(c)
            if sc is not None:
                sc.discard(pi)
        pivots.append(col)
        for ri in sorted(s - {pi}):
            row = live[ri]
            old_cols = set(row)
            new = _combine(row, pivot_row, col)
            if new:
                live[ri] = new
            else:
                del live[ri]
            new_cols = set(new)
            for c in old_cols - new_cols:
                sc = col_rows.get(c)
                if sc is not None:
                    sc.discard(ri)
            for c in new_cols - old_cols:
                col_rows.setdefault(c, set()).add(ri)
    return pivots


def rref(m: RatMatrix) -> tuple[list[int], list[dict[int, Fraction]]]:
    """Reduced row echelon form.

    Returns (pivot columns, reduced rows): one row per pivot, as a dict
    col -> Fraction with coefficient 1 on its pivot column and support
    only on later non-pivot columns.  RREF is unique, so the output does
    not depend on internal pivot-row choices.
    """
    rows = _scaled_int_rows(m)
    live = {i: r for i, r in enumerate(rows) if r}
    col_rows: dict[int, set] = {}
    for i, r in live.items():
        for c in r:
            col_rows.setdefault(c, set()).add(i)
    pivots: list[int] = []
    pivot_rows: list[tuple[int, int]] = []  # (pivot col, row id); row ids stay live for Jordan updates
    pivot_ids: set[int] = set()
    for col in sorted(col_rows):
        s = col_rows.get(col)
        if s:
            s = s - pivot_ids
        if not s:
            continue
        pi = min(s, key=lambda i: (len(live[i]), i))
        pivot_row = live[pi]
        pivots.append(col)
        pivot_rows.append((col, pi))
        pivot_ids.add(pi)
        all_with_col = col_rows[col] - {pi}
        for ri in sorted(all_with_col):
            row = live[ri]
            old_cols = set(row)
            new = _combine(row, pivot_row, col)
            if new:
                live[ri] = new
            else:
                if ri in pivot_ids:
                    raise AssertionError("pivot row vanished during Jordan elimination")
                del live[ri]
            new_cols = set(new)
            for c in old_cols - new_cols:
                sc = col_rows.get(c)
                if sc is not None:
                    sc.discard(ri)
            for c in new_cols - old_cols:
                col_rows.setdefault(c, set()).add(ri)
    reduced: list[dict[int, Fraction]] = []
    for col, pi in pivot_rows:
        row = live[pi]
        pv = row[col]
        reduced.append({c: Fraction(v, pv) for c, v in row.items()})
    return pivots, reduced


def nullspace(m: RatMatrix) -> list[dict[int, Fraction]]:
    """Basis of the right kernel {x : m x = 0}, one vector per free column.

    Vector for free column f has coordinate 1 at f and -coef at each
    pivot column, read off the RREF; ordered by free column index.
    """
    pivots, reduced = rref(m)
    pivot_set = set(pivots)
    free = [c for c in range(m.ncols) if c not in pivot_set]
    basis: list[dict[int, Fraction]] = []
    for f in free:
        vec: dict[int, Fraction] = {f: Fraction(1)}
        for col, row in zip(pivots, reduced):
            coef = row.get(f)
            if coef:
                vec[col] = -coef
        basis.append(vec)
    return basis
