"""Graded polynomial rings and degree-truncated quotient algebras.

A quotient A = S/I is presented by homogeneous generators and queried
degree by degree: monomial bases in graded-reverse-lexicographic order,
the span of the ideal in each degree as a sparse matrix, coset bases of
standard monomials (the non-pivot columns), and multiplication maps
A_d -> A_{d+1} by linear forms.

Standard monomials come from pivot selection on the degree-d ideal
matrix rather than a Groebner basis: at the truncation degrees used here
this is plain linear algebra, fully deterministic given the monomial
order.  Coefficients are rational; dimensions over Q agree with those
over any extension field, so tables computed here are the complex ones.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Mapping, Sequence

from .exactlin import RatMatrix, pivot_columns, rref

Monomial = tuple[int, ...]


class PresentationFormatError(ValueError):
    """Raised for malformed presentation text or inhomogeneous input."""


class TruncationError(ValueError):
    """Raised when a degree beyond the precomputed truncation is requested."""


# ---------------------------------------------------------------------------
# sparse polynomial dictionaries (monomial tuple -> Fraction)


def poly_add(a: Mapping[Monomial, Fraction], b: Mapping[Monomial, Fraction]) -> dict:
    out = dict(a)
    for m, c in b.items():
        v = out.get(m, Fraction(0)) + c
        if v:
            out[m] = v
        else:
            out.pop(m, None)
    return out


def poly_scale(a: Mapping[Monomial, Fraction], s) -> dict:
    s = Fraction(s)
    if s == 0:
        return {}
    return {m: c * s for m, c in a.items()}


def poly_sub(a: Mapping[Monomial, Fraction], b: Mapping[Monomial, Fraction]) -> dict:
    return poly_add(a, poly_scale(b, -1))


def poly_mul(a: Mapping[Monomial, Fraction], b: Mapping[Monomial, Fraction]) -> dict:
    out: dict[Monomial, Fraction] = {}
    for m1, c1 in a.items():
        for m2, c2 in b.items():
            m = tuple(x + y for x, y in zip(m1, m2))
            v = out.get(m, Fraction(0)) + c1 * c2
            if v:
                out[m] = v
            else:
                out.pop(m, None)
    return out


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GradedRing:
    """Polynomial ring presentation: variable count and positive weights."""

    nvars: int
    var_degrees: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.nvars < 0:
            raise ValueError("negative variable count")
        if len(self.var_degrees) != self.nvars:
            raise ValueError("one degree per variable required")
        if any(d < 1 for d in self.var_degrees):
            raise ValueError("variable degrees must be >= 1")

    @classmethod
    def standard(cls, nvars: int) -> "GradedRing":
        return cls(nvars, (1,) * nvars)

    def degree_of(self, mono: Monomial) -> int:
        return sum(e * d for e, d in zip(mono, self.var_degrees))


@dataclass(frozen=True)
class GradedPoly:
    """Homogeneous polynomial: sorted sparse terms plus its degree."""

    terms: tuple[tuple[Monomial, Fraction], ...]
    degree: int

    @classmethod
    def make(cls, ring: GradedRing, coeffs: Mapping[Monomial, object]) -> "GradedPoly":
        items = []
        degree = None
        for mono, c in coeffs.items():
            c = Fraction(c)
            if c == 0:
                continue
            if len(mono) != ring.nvars:
                raise PresentationFormatError(f"monomial {mono} has wrong arity")
            if any(e < 0 for e in mono):
                raise PresentationFormatError(f"negative exponent in {mono}")
            d = ring.degree_of(mono)
            if degree is None:
                degree = d
            elif d != degree:
                raise PresentationFormatError("generator is not homogeneous")
            items.append((tuple(mono), c))
        if degree is None:
            raise PresentationFormatError("zero generator")
        return cls(tuple(sorted(items)), degree)

    def as_dict(self) -> dict[Monomial, Fraction]:
        return dict(self.terms)


@dataclass(frozen=True)
class IdealPresentation:
    """Homogeneous ideal given by generators in a graded ring."""

    ring: GradedRing
    generators: tuple[GradedPoly, ...]

    def __post_init__(self) -> None:
        for g in self.generators:
            if g.degree < 1:
                raise PresentationFormatError("generators must have degree >= 1")

    @classmethod
    def make(cls, ring: GradedRing, gens: Iterable[Mapping[Monomial, object]]) -> "IdealPresentation":
        return cls(ring, tuple(GradedPoly.make(ring, g) for g in gens))


def monomial_basis(ring: GradedRing, d: int) -> list[Monomial]:
    """All exponent vectors of weighted degree d, in descending grevlex order.

    Two monomials of equal degree compare grevlex by the last non-zero
    entry of their exponent difference (negative means larger), which is
    the same as sorting the reversed exponent tuples ascending.
    """
    if d < 0:
        return []
    out: list[Monomial] = []
    exps = [0] * ring.nvars

    def rec(idx: int, remaining: int) -> None:
        if idx == ring.nvars:
            if remaining == 0:
                out.append(tuple(exps))
            return
        w = ring.var_degrees[idx]
        if idx == ring.nvars - 1:
            if remaining % w == 0:
                exps[idx] = remaining // w
                out.append(tuple(exps))
                exps[idx] = 0
            return
        for e in range(remaining // w + 1):
            exps[idx] = e
            rec(idx + 1, remaining - e * w)
        exps[idx] = 0

    if ring.nvars == 0:
        return [()] if d == 0 else []
    rec(0, d)
    out.sort(key=lambda m: tuple(reversed(m)))
    return out


def ideal_degree_matrix(p: IdealPresentation, d: int) -> RatMatrix:
    """Matrix whose rows span the degree-d piece of the ideal.

    One row per product m * g_k over the degree-d monomial basis, for
    every generator g_k and every monomial m of degree d - deg(g_k);
    rows ordered by (generator index, monomial order of m).
    """
    basis = monomial_basis(p.ring, d)
    index = {m: i for i, m in enumerate(basis)}
    items: list[tuple[int, int, Fraction]] = []
    r = 0
    for g in p.generators:
        cof_deg = d - g.degree
        if cof_deg < 0:
            continue
        for m in monomial_basis(p.ring, cof_deg):
            row_has = False
            for mono, c in g.terms:
                prod = tuple(a + b for a, b in zip(m, mono))
                items.append((r, index[prod], c))
                row_has = True
            if row_has:
                r += 1
    return RatMatrix.from_entries(r, len(basis), items)


def quotient_basis(p: IdealPresentation, d: int) -> list[Monomial]:
    """Standard monomials of degree d: non-pivot columns of the ideal matrix."""
    basis = monomial_basis(p.ring, d)
    pivots = set(pivot_columns(ideal_degree_matrix(p, d)))
    return [m for i, m in enumerate(basis) if i not in pivots]


class GradedQuotientAlgebra:
    """A = S/I truncated at a fixed degree, with precomputed coset data.

    For each d <= truncation the constructor stores the standard-monomial
    basis of A_d and a rewrite table sending every non-standard degree-d
    monomial to its expansion in the basis.  All later operations are
    table lookups; instances are immutable after construction.
    """

    def __init__(self, presentation: IdealPresentation, truncation_degree: int):
        if truncation_degree < 0:
            raise ValueError("truncation must be >= 0")
        self.presentation = presentation
        self.truncation_degree = truncation_degree
        ring = presentation.ring
        self._bases: list[tuple[Monomial, ...]] = []
        self._positions: list[dict[Monomial, int]] = []
        self._rewrites: list[dict[Monomial, tuple[tuple[int, Fraction], ...]]] = []
        for d in range(truncation_degree + 1):
            basis_all = monomial_basis(ring, d)
            pivots, reduced = rref(ideal_degree_matrix(presentation, d))
            pivot_set = set(pivots)
            standard = [m for i, m in enumerate(basis_all) if i not in pivot_set]
            pos = {m: i for i, m in enumerate(standard)}
            col_to_pos = {}
            for i, m in enumerate(basis_all):
                if i not in pivot_set:
                    col_to_pos[i] = pos[m]
            rewrites: dict[Monomial, tuple[tuple[int, Fraction], ...]] = {}
            for col, row in zip(pivots, reduced):
                expansion = tuple(
                    (col_to_pos[c], -v) for c, v in sorted(row.items()) if c != col
                )
                rewrites[basis_all[col]] = expansion
            self._bases.append(tuple(standard))
            self._positions.append(pos)
            self._rewrites.append(rewrites)
        if self.dim(0) != 1:
            raise AssertionError("degree-0 piece must be one-dimensional")

    @property
    def ring(self) -> GradedRing:
        return self.presentation.ring

    def dim(self, d: int) -> int:
        self._check_degree(d)
        return len(self._bases[d])

    def basis(self, d: int) -> tuple[Monomial, ...]:
        self._check_degree(d)
        return self._bases[d]

    def reduce_monomial(self, d: int, mono: Monomial) -> tuple[tuple[int, Fraction], ...]:
        """Expansion of a degree-d monomial in the degree-d coset basis,
        as (basis position, coefficient) pairs.  Standard monomials map
        to themselves."""
        self._check_degree(d)
        pos = self._positions[d].get(mono)
        if pos is not None:
            return ((pos, Fraction(1)),)
        rewrite = self._rewrites[d].get(mono)
        if rewrite is None:
            raise ValueError(f"{mono} is not a degree-{d} monomial of this ring")
        return rewrite

    def hilbert_function(self) -> list[int]:
        return [self.dim(d) for d in range(self.truncation_degree + 1)]

    def _check_degree(self, d: int) -> None:
        if not (0 <= d <= self.truncation_degree):
            raise TruncationError(
                f"degree {d} outside truncation 0..{self.truncation_degree}"
            )


def mult_linear_matrix(a: GradedQuotientAlgebra, form, d: int) -> RatMatrix:
    """Matrix of multiplication A_d -> A_{d+1} by a linear form, in the
    coset bases: multiply each basis monomial, then rewrite modulo I."""
    ring = a.ring
    if any(w != 1 for w in ring.var_degrees):
        raise ValueError("multiplication maps require all variables in degree 1")
    if d + 1 > a.truncation_degree:
        raise TruncationError(
            f"need degree {d + 1} data but truncation is {a.truncation_degree}"
        )
    if isinstance(form, GradedPoly):
        if form.degree != 1:
            raise ValueError("form must be homogeneous of degree 1")
        terms = form.terms
    else:
        terms = tuple(GradedPoly.make(ring, form).terms)
        if any(ring.degree_of(m) != 1 for m, _ in terms):
            raise ValueError("form must be homogeneous of degree 1")
    var_coeffs: list[tuple[int, Fraction]] = []
    for mono, c in terms:
        var_coeffs.append((mono.index(1), c))
    acc: dict[tuple[int, int], Fraction] = {}
    for col, m in enumerate(a.basis(d)):
        for i, c in var_coeffs:
            shifted = list(m)
            shifted[i] += 1
            for row, coef in a.reduce_monomial(d + 1, tuple(shifted)):
                key = (row, col)
                v = acc.get(key, Fraction(0)) + c * coef
                if v:
                    acc[key] = v
                else:
                    acc.pop(key, None)
    return RatMatrix.from_entries(a.dim(d + 1), a.dim(d), [(r, c, v) for (r, c), v in acc.items()])


def regular_sequence_series(nvars: int, gen_degrees: Sequence[int], upto: int) -> list[int]:
    """Coefficients through t^upto of prod_k (1 - t^{d_k}) / (1 - t)^nvars,
    the Hilbert series a length-k regular sequence of those degrees in a
    standard graded polynomial ring must produce."""
    num = [1]
    for dk in gen_degrees:
        new = num + [0] * dk
        for i, c in enumerate(num):
            new[i + dk] -= c
        num = new
    out = []
    for m in range(upto + 1):
        total = 0
        for i, c in enumerate(num):
            if i > m:
                break
            if c:
                if nvars == 0:
                    total += c if i == m else 0
                else:
                    total += c * comb(m - i + nvars - 1, nvars - 1)
        out.append(total)
    return out


# ---------------------------------------------------------------------------
# text format for ideal presentations
#
#   vars n [d_1 ... d_n]
#   <generator>
#   ...
#
# one generator per line, written as coeff*monomial +/- ...; monomials are
# products of powers x1^a1 x2^a2 ... (separated by spaces or '*'),
# coefficients exact integers or rationals p/q.  '#' starts a comment.

_TOKEN = re.compile(r"\s*(?:(?P<sign>[+-])|(?P<num>\d+(?:/\d+)?)|(?P<var>x\d+(?:\^\d+)?)|(?P<mul>\*))")


def _parse_generator_line(line: str, nvars: int) -> dict[Monomial, Fraction]:
    poly: dict[Monomial, Fraction] = {}
    pos = 0
    coeff: Fraction | None = None
    exps: list[int] | None = None
    pending_sign = 1

    def flush() -> None:
        nonlocal coeff, exps, pending_sign
        if coeff is None and exps is None:
            return
        c = Fraction(pending_sign) * (coeff if coeff is not None else Fraction(1))
        mono = tuple(exps) if exps is not None else (0,) * nvars
        v = poly.get(mono, Fraction(0)) + c
        if v:
            poly[mono] = v
        else:
            poly.pop(mono, None)
        coeff = None
        exps = None
        pending_sign = 1

    while pos < len(line):
        m = _TOKEN.match(line, pos)
        if m is None:
            raise PresentationFormatError(f"cannot parse generator near {line[pos:pos+20]!r}")
        pos = m.end()
        if m.group("sign"):
            flush()
            pending_sign = -1 if m.group("sign") == "-" else 1
        elif m.group("num"):
            n = m.group("num")
            f = Fraction(int(n.split("/")[0]), int(n.split("/")[1])) if "/" in n else Fraction(int(n))
            coeff = f if coeff is None else coeff * f
        elif m.group("var"):
            tok = m.group("var")
            if "^" in tok:
                name, exp = tok.split("^")
                e = int(exp)
            else:
                name, e = tok, 1
            idx = int(name[1:]) - 1
            if not (0 <= idx < nvars):
                raise PresentationFormatError(f"variable {tok} out of range for {nvars} variables")
            if exps is None:
                exps = [0] * nvars
            exps[idx] += e
        # '*' is pure punctuation
    flush()
    if not poly:
        raise PresentationFormatError(f"empty generator line: {line!r}")
    return poly


def parse_presentation(text: str) -> IdealPresentation:
    """Parse the presentation text format (see module comment)."""
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise PresentationFormatError("empty presentation")
    header = lines[0].split()
    if header[0] != "vars" or len(header) < 2:
        raise PresentationFormatError("first line must be: vars n [d_1 ... d_n]")
    try:
        nvars = int(header[1])
        weights = [int(t) for t in header[2:]]
    except ValueError as exc:
        raise PresentationFormatError(f"bad vars header: {lines[0]!r}") from exc
    if not weights:
        weights = [1] * nvars
    if len(weights) != nvars:
        raise PresentationFormatError("vars header must list one degree per variable")
    ring = GradedRing(nvars, tuple(weights))
    gens = [_parse_generator_line(line, nvars) for line in lines[1:]]
    if not gens:
        raise PresentationFormatError("presentation has no generators")
    return IdealPresentation.make(ring, gens)


def format_monomial(mono: Monomial) -> str:
    parts = []
    for i, e in enumerate(mono):
        if e == 1:
            parts.append(f"x{i + 1}")
        elif e > 1:
            parts.append(f"x{i + 1}^{e}")
    return " ".join(parts)


def format_presentation(p: IdealPresentation) -> str:
    """Inverse of parse_presentation (round-trips up to whitespace)."""
    lines = ["vars {} {}".format(p.ring.nvars, " ".join(str(d) for d in p.ring.var_degrees))]
    for g in p.generators:
        terms = sorted(g.terms, key=lambda t: tuple(reversed(t[0])))
        pieces = []
        for k, (mono, c) in enumerate(terms):
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            body = format_monomial(mono)
            if mag != 1 or not body:
                body = f"{mag}*{body}" if body else str(mag)
            if k == 0:
                pieces.append(body if sign == "+" else f"-{body}")
            else:
                pieces.append(f"{sign} {body}")
        lines.append(" ".join(pieces))
    return "\n".join(lines) + "\n"
