"""Fans of smooth complete toric varieties and their Chow dimensions.

A fan is given by primitive rays and full-dimensional smooth cones; all
other cones are faces of maximal ones.  The group of codimension-i
cycle classes (rational coefficients) of the open set obtained by
deleting a chosen set of boundary divisors is presented on the
dimension-i cones:

  * rational-equivalence rows: for every cone tau of dimension i-1 and
    every basis vector m of the sublattice orthogonal to tau, the row
    with coefficient <m, v_sigma> on each dimension-i cone sigma
    containing tau, where v_sigma is sigma's extra ray;
  * kill rows: a unit row for every generator whose cone meets a
    removed ray.  For a smooth fan the classes supported on a boundary
    divisor span exactly the classes of cones containing its ray, so
    deleting the divisor quotients by that span; see the README for the
    two-line argument.

The requested dimension is the cokernel of this relation matrix.

Fans are trusted only after validation: checking operations call
`validate` internally (results are cached per fan) and refuse fans with
non-primitive rays, non-unimodular cones, or incomplete support.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import gcd

from .exactlin import RatMatrix, cokernel_dim, nullspace


class FanFormatError(ValueError):
    """Raised for unparsable fan files."""


class InvalidFanError(ValueError):
    """Raised when an operation receives a fan that fails validation."""


@dataclass(frozen=True)
class Fan:
    """dim, primitive rays, and maximal cones as sorted ray-index tuples."""

    dim: int
    rays: tuple[tuple[int, ...], ...]
    max_cones: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "rays", tuple(tuple(int(c) for c in r) for r in self.rays))
        object.__setattr__(
            self, "max_cones", tuple(tuple(sorted(int(i) for i in c)) for c in self.max_cones)
        )


@dataclass(frozen=True)
class FanReport:
    """Validation outcome: empty `problems` means the fan is accepted."""

    ok: bool
    problems: tuple[str, ...]
    cone_counts: tuple[int, ...]  # number of cones per dimension 0..n

    def __str__(self) -> str:
        if self.ok:
            return "valid fan; cones per dimension " + str(list(self.cone_counts))
        return "invalid fan:\n" + "\n".join("  - " + p for p in self.problems)


def _int_det(rows: list[list[int]]) -> int:
    """Exact integer determinant by fraction-free elimination."""
    n = len(rows)
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def cones_of_dim(f: Fan, k: int) -> list[tuple[int, ...]]:
    """All k-dimensional cones (as sorted ray-index tuples): for smooth
    complete fans these are exactly the k-subsets of maximal cones."""
    if k == 0:
        return [()]
    out = set()
    for c in f.max_cones:
        out.update(combinations(c, k))
    return sorted(out)


@lru_cache(maxsize=256)
def validate(f: Fan) -> FanReport:
    """Smoothness and completeness diagnostics.

    Checks: primitive non-zero rays of the right arity, no duplicate
    rays; each maximal cone has exactly n in-range rays forming a lattice
    basis (determinant +-1); every codimension-1 face lies in exactly
    two maximal cones; the alternating cone count matches the Euler
    characteristic of the (n-1)-sphere.
    """
    problems: list[str] = []
    n = f.dim
    if n < 1:
        problems.append(f"fan dimension must be >= 1, got {n}")
    for idx, ray in enumerate(f.rays):
        if len(ray) != n:
            problems.append(f"ray {idx} {ray} has arity {len(ray)}, expected {n}")
            continue
        if all(c == 0 for c in ray):
            problems.append(f"ray {idx} is zero")
            continue
        g = 0
        for c in ray:
            g = gcd(g, c)
        if g != 1:
            problems.append(f"ray {idx} {ray} is not primitive (content {g})")
    if len(set(f.rays)) != len(f.rays):
        problems.append("duplicate rays present")
    if not f.max_cones:
        problems.append("no maximal cones")
    if len(set(f.max_cones)) != len(f.max_cones):
        problems.append("duplicate maximal cones present")
    arity_ok = not problems
    for cone in f.max_cones:
        if len(set(cone)) != n:
            problems.append(f"cone {cone} must have exactly {n} distinct rays")
            continue
        if any(i < 0 or i >= len(f.rays) for i in cone):
            problems.append(f"cone {cone} has out-of-range ray indices")
            continue
        if arity_ok:
            det = _int_det([list(f.rays[i]) for i in cone])
            if det not in (1, -1):
                problems.append(f"cone {cone} is not smooth (determinant {det})")
    if not problems:
        ridge_count: dict[tuple[int, ...], int] = {}
        for cone in f.max_cones:
            for ridge in combinations(cone, n - 1):
                ridge_count[ridge] = ridge_count.get(ridge, 0) + 1
        for ridge, count in sorted(ridge_count.items()):
            if count != 2:
                problems.append(
                    f"codimension-1 face {ridge} lies in {count} maximal cones (expected 2)"
                )
        euler = sum((-1) ** (k - 1) * len(cones_of_dim(f, k)) for k in range(1, n + 1))
        expected = 1 + (-1) ** (n - 1)
        if euler != expected:
            problems.append(
                f"alternating cone count {euler} != sphere Euler characteristic {expected}"
            )
    counts = tuple(len(cones_of_dim(f, k)) for k in range(n + 1)) if not problems else ()
    return FanReport(not problems, tuple(problems), counts)


def _require_valid(f: Fan) -> None:
    report = validate(f)
    if not report.ok:
        raise InvalidFanError(str(report))


def h_vector(f: Fan) -> list[int]:
    """h_i = sum_k (-1)^(k-i) C(k, i) #cones(n-k): the diagonal Hodge
    numbers (equivalently Chow ranks) of the compact toric variety."""
    from math import comb

    _require_valid(f)
    n = f.dim
    counts = [len(cones_of_dim(f, k)) for k in range(n + 1)]
    out = []
    for i in range(n + 1):
        out.append(sum((-1) ** (k - i) * comb(k, i) * counts[n - k] for k in range(i, n + 1)))
    return out


def chow_presentation(f: Fan, i: int, removed: frozenset[int] = frozenset()) -> tuple[list[tuple[int, ...]], RatMatrix]:
    """Generators (dimension-i cones) and the full relation matrix for the
    codimension-i cycle classes of the complement of the removed divisors."""
    _require_valid(f)
    n = f.dim
    if not (0 <= i <= n):
        raise ValueError(f"codimension {i} out of range 0..{n}")
    removed = frozenset(removed)
    if any(r < 0 or r >= len(f.rays) for r in removed):
        raise ValueError("removed set contains out-of-range ray indices")
    gens = cones_of_dim(f, i)
    gen_pos = {c: p for p, c in enumerate(gens)}
    items: list[tuple[int, int, Fraction]] = []
    row = 0
    if i >= 1:
        # sigma runs over cones obtained by extending tau by one ray
        extensions: dict[tuple[int, ...], list[tuple[tuple[int, ...], int]]] = {}
        for sigma in gens:
            for t in range(i):
                tau = sigma[:t] + sigma[t + 1 :]
                extensions.setdefault(tau, []).append((sigma, sigma[t]))
        for tau in cones_of_dim(f, i - 1):
            if tau:
                span = RatMatrix.from_rows([list(f.rays[r]) for r in tau], ncols=n)
                perp = nullspace(span)
            else:
                perp = [{c: Fraction(1)} for c in range(n)]
            sigmas = extensions.get(tau, [])
            for m in perp:
                wrote = False
                for sigma, extra in sigmas:
                    coef = sum(v * f.rays[extra][c] for c, v in m.items())
                    if coef:
                        items.append((row, gen_pos[sigma], coef))
                        wrote = True
                if wrote:
                    row += 1
    if removed:
        for sigma, pos in gen_pos.items():
            if removed.intersection(sigma):
                items.append((row, pos, Fraction(1)))
                row += 1
    return gens, RatMatrix.from_entries(row, len(gens), items)


def chow_dim(f: Fan, i: int, removed=frozenset()) -> int:
    """Dimension over Q of the codimension-i cycle class group of the
    open set with the chosen boundary divisors deleted."""
    _, matrix = chow_presentation(f, i, frozenset(removed))
    return cokernel_dim(matrix)


# ---------------------------------------------------------------------------
# builders


def projective_space_fan(n: int) -> Fan:
    """Fan of P^n: the coordinate rays plus their negative sum."""
    rays = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    rays.append(tuple(-1 for _ in range(n)))
    cones = [tuple(sorted(c)) for c in combinations(range(n + 1), n)]
    return Fan(n, tuple(rays), tuple(cones))


def product_fan(a: Fan, b: Fan) -> Fan:
    """Fan of the product variety: concatenated rays, paired cones."""
    rays = [r + (0,) * b.dim for r in a.rays] + [(0,) * a.dim + r for r in b.rays]
    off = len(a.rays)
    cones = []
    for ca in a.max_cones:
        for cb in b.max_cones:
            cones.append(tuple(sorted(ca + tuple(off + i for i in cb))))
    return Fan(a.dim + b.dim, tuple(rays), tuple(cones))


def hirzebruch_fan(a: int) -> Fan:
    """Fan of the Hirzebruch surface F_a (P^1-bundle over P^1 of twist a)."""
    rays = ((1, 0), (0, 1), (-1, a), (0, -1))
    cones = ((0, 1), (1, 2), (2, 3), (0, 3))
    return Fan(2, rays, cones)


# ---------------------------------------------------------------------------
# text format:
#   dim n
#   ray c1 ... cn          (integers only)
#   cone i1 ... in         (0-based ray indices)
# '#' starts a comment.


def parse_fan(text: str) -> Fan:
    dim = None
    rays: list[tuple[int, ...]] = []
    cones: list[tuple[int, ...]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        head, args = parts[0], parts[1:]
        try:
            values = [int(t, 10) for t in args]
        except ValueError as exc:
            raise FanFormatError(f"line {lineno}: non-integer token in {line!r}") from exc
        if any("." in t or "e" in t.lower() for t in args):
            raise FanFormatError(f"line {lineno}: floats are not accepted")
        if head == "dim":
            if dim is not None or len(values) != 1:
                raise FanFormatError(f"line {lineno}: malformed dim header")
            dim = values[0]
        elif head == "ray":
            rays.append(tuple(values))
        elif head == "cone":
            cones.append(tuple(values))
        else:
            raise FanFormatError(f"line {lineno}: unknown directive {head!r}")
    if dim is None:
        raise FanFormatError("missing 'dim n' header")
    return Fan(dim, tuple(rays), tuple(cones))


def format_fan(f: Fan) -> str:
    lines = [f"dim {f.dim}"]
    lines += ["ray " + " ".join(str(c) for c in ray) for ray in f.rays]
    lines += ["cone " + " ".join(str(i) for i in cone) for cone in f.max_cones]
    return "\n".join(lines) + "\n"
