"""Tests for graded rings, ideal presentations and quotient algebras."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from loghodge.exactlin import rank
from loghodge.gralg import (
    GradedPoly,
    GradedQuotientAlgebra,
    GradedRing,
    IdealPresentation,
    PresentationFormatError,
    TruncationError,
    format_presentation,
    ideal_degree_matrix,
    monomial_basis,
    mult_linear_matrix,
    parse_presentation,
    poly_add,
    poly_mul,
    poly_scale,
    quotient_basis,
    regular_sequence_series,
)


R2 = GradedRing.standard(2)
XY_DIAG = IdealPresentation.make(R2, [{(1, 0): 1, (0, 1): -1}])  # C[x,y]/(x-y)


def ring_dim(ring, d):
    return len(monomial_basis(ring, d))


# ---------------------------------------------------------------------------
# monomial bases


def test_monomial_basis_two_vars_degree_two():
    assert monomial_basis(R2, 2) == [(2, 0), (1, 1), (0, 2)]


def test_monomial_basis_weighted_unreachable():
    assert monomial_basis(GradedRing(1, (2,)), 3) == []


def test_monomial_basis_six_vars_count():
    assert len(monomial_basis(GradedRing.standard(6), 2)) == 21


def test_monomial_basis_grevlex_order_property():
    # within one degree, m precedes m' iff the last non-zero entry of
    # m - m' is negative
    basis = monomial_basis(GradedRing.standard(3), 3)
    for a, b in zip(basis, basis[1:]):
        diff = [x - y for x, y in zip(a, b)]
        last = next(d for d in reversed(diff) if d != 0)
        assert last < 0


def test_monomial_basis_counts_match_binomials():
    from math import comb

    for n in (1, 2, 4):
        ring = GradedRing.standard(n)
        for d in range(5):
            assert len(monomial_basis(ring, d)) == comb(d + n - 1, n - 1)


# ---------------------------------------------------------------------------
# ideal degree matrices and quotient bases


def test_ideal_matrix_diagonal_example():
    m = ideal_degree_matrix(XY_DIAG, 2)
    assert m.nrows == 2
    assert rank(m) == 2


def test_ideal_matrix_degree_zero_empty():
    m = ideal_degree_matrix(XY_DIAG, 0)
    assert m.nrows == 0


def test_ideal_matrix_single_quadric():
    p = IdealPresentation.make(GradedRing.standard(3), [{(2, 0, 0): 1, (0, 1, 1): 1}])
    m = ideal_degree_matrix(p, 2)
    assert m.nrows == 1
    assert rank(m) == 1


def test_quotient_basis_diagonal_is_line():
    for d in range(5):
        assert len(quotient_basis(XY_DIAG, d)) == 1


def test_quotient_basis_no_generators():
    p = IdealPresentation.make(R2, [])
    assert quotient_basis(p, 2) == monomial_basis(R2, 2)


def test_quotient_basis_killed_variable():
    ring = GradedRing(1, (2,))
    p = IdealPresentation.make(ring, [{(1,): 1}])
    assert quotient_basis(p, 2) == []


def test_quotient_dim_equals_codim_of_ideal_rows():
    ring = GradedRing.standard(3)
    p = IdealPresentation.make(ring, [{(2, 0, 0): 1, (0, 1, 1): 1}, {(0, 1, 0): 1, (0, 0, 1): -2}])
    for d in range(4):
        assert len(quotient_basis(p, d)) == ring_dim(ring, d) - rank(ideal_degree_matrix(p, d))


# ---------------------------------------------------------------------------
# quotient algebras


def test_algebra_reduction_is_projection():
    a = GradedQuotientAlgebra(XY_DIAG, 3)
    for d in range(4):
        for pos, mono in enumerate(a.basis(d)):
            assert a.reduce_monomial(d, mono) == ((pos, Fraction(1)),)


def test_algebra_rejects_zero_generator():
    with pytest.raises(PresentationFormatError):
        IdealPresentation.make(R2, [{}])


def test_algebra_rejects_inhomogeneous_generator():
    with pytest.raises(PresentationFormatError):
        IdealPresentation.make(R2, [{(1, 0): 1, (2, 0): 1}])


def test_mult_matrix_diagonal_example():
    a = GradedQuotientAlgebra(XY_DIAG, 3)
    m = mult_linear_matrix(a, {(1, 0): 1}, 1)
    assert m.to_rows() == [[1]]


def test_mult_matrix_by_ideal_element_is_zero():
    a = GradedQuotientAlgebra(XY_DIAG, 3)
    m = mult_linear_matrix(a, {(1, 0): 1, (0, 1): -1}, 1)
    assert m.is_zero() and m.nrows == m.ncols == 1


def test_mult_matrix_free_ring_injective():
    a = GradedQuotientAlgebra(IdealPresentation.make(R2, []), 4)
    for d in range(4):
        m = mult_linear_matrix(a, {(1, 0): 1}, d)
        assert rank(m) == a.dim(d)


def test_mult_matrix_truncation_guard():
    a = GradedQuotientAlgebra(XY_DIAG, 2)
    with pytest.raises(TruncationError):
        mult_linear_matrix(a, {(1, 0): 1}, 2)


def test_mult_matrices_commute():
    ring = GradedRing.standard(4)
    p = IdealPresentation.make(ring, [{(2, 0, 0, 0): 1, (0, 1, 1, 0): 3, (0, 0, 0, 2): -1}])
    a = GradedQuotientAlgebra(p, 3)
    u = {(1, 0, 0, 0): Fraction(1), (0, 0, 1, 0): Fraction(2)}
    v = {(0, 1, 0, 0): Fraction(1), (0, 0, 0, 1): Fraction(-1, 3)}
    for d in range(2):
        uv = mult_linear_matrix(a, u, d + 1) @ mult_linear_matrix(a, v, d)
        vu = mult_linear_matrix(a, v, d + 1) @ mult_linear_matrix(a, u, d)
        assert uv.entries == vu.entries


@st.composite
def small_presentations(draw):
    nvars = draw(st.integers(1, 3))
    ring = GradedRing.standard(nvars)
    ngens = draw(st.integers(0, 2))
    gens = []
    for _ in range(ngens):
        deg = draw(st.integers(1, 2))
        basis = monomial_basis(ring, deg)
        coeffs = draw(
            st.lists(
                st.integers(-3, 3), min_size=len(basis), max_size=len(basis)
            ).filter(lambda cs: any(cs))
        )
        gens.append({m: c for m, c in zip(basis, coeffs) if c})
    return IdealPresentation.make(ring, gens)


@settings(deadline=None)
@given(small_presentations(), st.integers(0, 3))
def test_quotient_dim_formula_random(p, d):
    expected = ring_dim(p.ring, d) - rank(ideal_degree_matrix(p, d))
    assert len(quotient_basis(p, d)) == expected
    a = GradedQuotientAlgebra(p, 3)
    assert a.dim(d) == expected


@settings(deadline=None)
@given(small_presentations())
def test_degree_zero_is_one_dimensional(p):
    assert GradedQuotientAlgebra(p, 1).dim(0) == 1


# ---------------------------------------------------------------------------
# Hilbert series of regular sequences


def test_regular_sequence_series_single_quadric():
    assert regular_sequence_series(6, [2], 4) == [1, 6, 20, 50, 105]


def test_regular_sequence_series_empty_product():
    from math import comb

    assert regular_sequence_series(3, [], 4) == [comb(d + 2, 2) for d in range(5)]


def test_regular_sequence_series_no_variables():
    assert regular_sequence_series(0, [], 3) == [1, 0, 0, 0]


def test_hilbert_function_matches_series_for_plane_conic():
    ring = GradedRing.standard(3)
    p = IdealPresentation.make(ring, [{(2, 0, 0): 1, (0, 2, 0): 1, (0, 0, 2): 1}])
    a = GradedQuotientAlgebra(p, 4)
    assert a.hilbert_function() == regular_sequence_series(3, [2], 4)


# ---------------------------------------------------------------------------
# text format


def test_parse_presentation_basic():
    p = parse_presentation("vars 2\nx1 - x2\n")
    assert p.ring.nvars == 2
    assert p.generators[0].terms == (((0, 1), Fraction(-1)), ((1, 0), Fraction(1)))


def test_parse_presentation_weighted_header_and_coeffs():
    p = parse_presentation("vars 2 1 2\n3*x1^2 - 1/2*x2\n")
    assert p.ring.var_degrees == (1, 2)
    g = p.generators[0]
    assert g.degree == 2
    assert dict(g.terms) == {(2, 0): Fraction(3), (0, 1): Fraction(-1, 2)}


def test_parse_presentation_comments_and_star_separators():
    text = "# quadric\nvars 3\nx1*x2 + x3^2  # inline\n"
    p = parse_presentation(text)
    assert dict(p.generators[0].terms) == {(1, 1, 0): Fraction(1), (0, 0, 2): Fraction(1)}


def test_parse_presentation_errors():
    with pytest.raises(PresentationFormatError):
        parse_presentation("")
    with pytest.raises(PresentationFormatError):
        parse_presentation("vars\nx1\n")
    with pytest.raises(PresentationFormatError):
        parse_presentation("vars 2\n")
    with pytest.raises(PresentationFormatError):
        parse_presentation("vars 2\nx3 + x1\n")
    with pytest.raises(PresentationFormatError):
        parse_presentation("vars 2\nx1^2 + x2\n")  # inhomogeneous
    with pytest.raises(PresentationFormatError):
        parse_presentation("vars 2\nx1 - x1\n")  # cancels to zero


def test_format_parse_round_trip():
    ring = GradedRing.standard(3)
    p = IdealPresentation.make(
        ring,
        [
            {(2, 0, 0): Fraction(3, 2), (1, 1, 0): -1, (0, 0, 2): 1},
            {(1, 0, 0): 1, (0, 1, 0): -5},
        ],
    )
    assert parse_presentation(format_presentation(p)) == p


# ---------------------------------------------------------------------------
# polynomial dictionary helpers


def test_poly_helpers():
    a = {(1, 0): Fraction(1)}
    b = {(0, 1): Fraction(2)}
    assert poly_add(a, poly_scale(a, -1)) == {}
    assert poly_mul(a, b) == {(1, 1): Fraction(2)}
    sq = poly_mul(poly_add(a, b), poly_add(a, b))
    assert sq == {(2, 0): Fraction(1), (1, 1): Fraction(4), (0, 2): Fraction(4)}
