"""Koszul slices and bigraded homology tables.

For a quotient algebra A of a standard graded ring with variable space
V, the internal-degree-j slice of the Koszul complex has terms
(wedge^k V) (x) A_{j-k} for k = 0..j and differential

    d(e_{i1} ^ ... ^ e_{ik} (x) a)
        = sum_s (-1)^(s+1) e_{...without i_s...} (x) (x_{i_s} * a).

Homology in homological degree k gives the table entry at
(i, j) = (j - k, j).  Only one slice is ever materialised at a time:
each is finite-dimensional exact linear algebra, which is what makes
the whole computation terminate.

Index subsets are sorted tuples ordered lexicographically and the term
basis is (subset, coset monomial) in subset-major order, fixing every
matrix layout bit for bit.  Signs are a convention; the composition
check d o d = 0 enforces internal consistency and homology dimensions
do not depend on it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

from .exactlin import RatMatrix, rank
from .gralg import GradedQuotientAlgebra, Monomial, TruncationError, mult_linear_matrix
from .table import BigradedTable


class CompositionError(RuntimeError):
    """d o d != 0: a slice was assembled inconsistently.  Never silent."""


@dataclass(frozen=True)
class KoszulSlice:
    """Degree-j slice: term bases and differentials d_k : term_k -> term_{k-1}.

    `subsets[k]` lists the wedge-index subsets, `coset_bases[k]` the
    standard monomials of A_{j-k}; `differentials[k]` is d_k, with d_0
    the zero map out of term_0.
    """

    internal_degree: int
    subsets: tuple[tuple[tuple[int, ...], ...], ...]
    coset_bases: tuple[tuple[Monomial, ...], ...]
    differentials: tuple[RatMatrix, ...]

    @property
    def term_dims(self) -> tuple[int, ...]:
        return tuple(len(s) * len(b) for s, b in zip(self.subsets, self.coset_bases))

    def euler_checksum(self) -> int:
        return sum((-1) ** k * d for k, d in enumerate(self.term_dims))


def build_slice(a: GradedQuotientAlgebra, j: int) -> KoszulSlice:
    """Assemble the internal-degree-j Koszul slice of the algebra."""
    ring = a.ring
    if any(w != 1 for w in ring.var_degrees):
        raise ValueError("Koszul slices require all variables in degree 1")
    if j < 0:
        raise ValueError("internal degree must be >= 0")
    if j > a.truncation_degree:
        raise TruncationError(f"slice degree {j} exceeds truncation {a.truncation_degree}")
    n = ring.nvars
    subsets = tuple(tuple(combinations(range(n), k)) for k in range(j + 1))
    bases = tuple(a.basis(j - k) for k in range(j + 1))
    # column lists of the multiplication maps A_d -> A_{d+1}, per variable
    mult_cols: dict[tuple[int, int], list[list[tuple[int, Fraction]]]] = {}
    for k in range(1, j + 1):
        d = j - k
        for i in range(n):
            if (i, d) not in mult_cols:
                m = mult_linear_matrix(a, {_unit(n, i): Fraction(1)}, d)
                cols: list[list[tuple[int, Fraction]]] = [[] for _ in range(m.ncols)]
                for r, c, v in m.entries:
                    cols[c].append((r, v))
                mult_cols[(i, d)] = cols

    diffs: list[RatMatrix] = [RatMatrix.zero(0, len(bases[0]))]
    for k in range(1, j + 1):
        src_subsets = subsets[k]
        dst_pos = {s: p for p, s in enumerate(subsets[k - 1])}
        dim_dst_basis = len(bases[k - 1])
        items: list[tuple[int, int, Fraction]] = []
        d = j - k
        for sp, S in enumerate(src_subsets):
            col_base = sp * len(bases[k])
            for s, i in enumerate(S):
                sign = 1 if s % 2 == 0 else -1
                target = dst_pos[S[:s] + S[s + 1 :]]
                row_base = target * dim_dst_basis
                cols = mult_cols[(i, d)]
                for mp in range(len(bases[k])):
                    col = col_base + mp
                    for r, v in cols[mp]:
                        items.append((row_base + r, col, v if sign > 0 else -v))
        nrows = comb(n, k - 1) * dim_dst_basis
        ncols = comb(n, k) * len(bases[k])
        diffs.append(_collect(nrows, ncols, items))
    return KoszulSlice(j, subsets, bases, tuple(diffs))


def _unit(n: int, i: int) -> Monomial:
    e = [0] * n
    e[i] = 1
    return tuple(e)


def _collect(nrows: int, ncols: int, items) -> RatMatrix:
    acc: dict[tuple[int, int], Fraction] = {}
    for r, c, v in items:
        key = (r, c)
        w = acc.get(key, Fraction(0)) + v
        if w:
            acc[key] = w
        else:
            acc.pop(key, None)
    return RatMatrix.from_entries(nrows, ncols, [(r, c, v) for (r, c), v in acc.items()])


def homology_dims(s: KoszulSlice) -> list[int]:
    """Homology dimensions H_k for k = 0..j.

    Verifies d_k o d_{k+1} = 0 first and raises CompositionError on any
    failure; then H_k = (term_k dim - rank d_k) - rank d_{k+1}.
    """
    j = s.internal_degree
    for k in range(1, j + 1):
        if not (s.differentials[k - 1] @ s.differentials[k]).is_zero():
            raise CompositionError(
                f"d_{k-1} o d_{k} != 0 on slice of internal degree {j}"
            )
    dims = s.term_dims
    ranks = [rank(m) for m in s.differentials] + [0]
    out = []
    for k in range(j + 1):
        h = dims[k] - ranks[k] - ranks[k + 1]
        if h < 0:
            raise CompositionError(f"negative homology dimension at k={k}, j={j}")
        out.append(h)
    return out


def tor_table(a: GradedQuotientAlgebra, j_max: int = 5) -> BigradedTable:
    """Bigraded homology table of the algebra through internal degree j_max.

    Entry (i, j) is H_{j-i} of the degree-j slice; per-degree Euler
    checksums (alternating sums of term dimensions) are recorded in the
    table metadata and verified against the homology dimensions.
    """
    if j_max > a.truncation_degree:
        raise TruncationError(
            f"j_max {j_max} exceeds algebra truncation {a.truncation_degree}"
        )
    entries: dict[tuple[int, int], int] = {}
    checksums: dict[int, int] = {}
    for j in range(j_max + 1):
        s = build_slice(a, j)
        hs = homology_dims(s)
        checksum = s.euler_checksum()
        if checksum != sum((-1) ** k * h for k, h in enumerate(hs)):
            raise CompositionError(f"Euler checksum mismatch at internal degree {j}")
        checksums[j] = checksum
        for k, h in enumerate(hs):
            if h:
                entries[(j - k, j)] = h
    return BigradedTable(entries, source="koszul-engine", jmax=j_max, checksums=checksums)
