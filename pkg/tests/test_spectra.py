"""Geodesic lengths, the lambda invariant, and length-ratio rationality.

Decimal anchors follow the bracketing convention used across this suite:
an enclosure is checked to sit inside [digits, digits + ulp] rather than
to contain any particular rounding of the true value, since a certified
interval can easily be narrower than the anchor's own error.
"""

from fractions import Fraction

import pytest

from commensura.errors import (
    DimensionMismatch,
    NotHyperbolic,
    UnsupportedGroup,
    ValidationError,
    ZeroVector,
)
from commensura.exactnum import PolyQ
from commensura.rootsys import RootSystemType
from commensura.spectra import (
    GeodesicLength,
    SplitTorusElement,
    bc_scaling_check,
    hyperbolic_length,
    lambda_gamma,
    length_commensurable_samples,
    ratio_rational,
    rational_length_spectrum,
)
from commensura.weakcomm import SemisimpleElement

GAMMA = [[2, 1], [1, 1]]


def assert_in_digit_bracket(iv, lo: str, hi: str):
    assert Fraction(lo) <= iv.lo and iv.hi <= Fraction(hi)


# ---------------------------------------------------------------------------
# hyperbolic lengths


def test_length_of_the_standard_hyperbolic():
    length = hyperbolic_length(GAMMA)
    assert_in_digit_bracket(length.numeric, "1.9248473002", "1.9248473003")
    assert length.numeric.width < Fraction(1, 10**9)
    assert length.t.minpoly == PolyQ.from_coeffs([1, -3, 1])


def test_length_from_negative_trace():
    # the geodesic only sees the image in PSL_2, so -g gives the same length
    neg = [[-2, -1], [-1, -1]]
    a, b = hyperbolic_length(GAMMA), hyperbolic_length(neg)
    assert a.t == b.t
    assert a.numeric.intersects(b.numeric)


def test_length_with_quadratic_eigenvalue():
    # trace 4: t = 2 + sqrt(3), length 2*log(2 + sqrt 3)
    length = hyperbolic_length([[4, 1], [-1, 0]])
    assert_in_digit_bracket(length.numeric, "2.6339157938", "2.6339157939")


def test_higher_precision_nests():
    coarse = hyperbolic_length(GAMMA, bits=32)
    fine = hyperbolic_length(GAMMA, bits=128)
    assert coarse.numeric.lo <= fine.numeric.lo and fine.numeric.hi <= coarse.numeric.hi
    assert fine.numeric.width < coarse.numeric.width


def test_winding_rescale():
    length = hyperbolic_length(GAMMA)
    halved = length.with_winding(2)
    assert halved.winding_divisor == 2
    assert halved.numeric.lo == length.numeric.lo / 2
    with pytest.raises(ValidationError):
        GeodesicLength(length.t, length.numeric, winding_divisor=0)


def test_inconsistent_interval_rejected():
    length = hyperbolic_length(GAMMA)
    with pytest.raises(ValidationError):
        GeodesicLength(length.t, length.numeric.scale(3))


@pytest.mark.parametrize(
    "rows", [[[1, 1], [0, 1]], [[0, -1], [1, 0]], [[1, 0], [0, 1]]]
)
def test_non_hyperbolic_rejected(rows):
    with pytest.raises(NotHyperbolic):
        hyperbolic_length(rows)


def test_lengths_only_on_sl2():
    ident3 = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    with pytest.raises(UnsupportedGroup):
        hyperbolic_length(ident3)


# ---------------------------------------------------------------------------
# the lambda invariant


def test_lambda_square_on_rank_one():
    # eigenvalues 2, 1/2: lambda^2 = 8 * log(2)^2
    e = SplitTorusElement(RootSystemType("A", 1), (2, Fraction(1, 2)))
    lam = lambda_gamma(e)
    assert_in_digit_bracket(lam.squared, "3.8436241113", "3.8436241114")
    assert lam.gram == ((2, -2), (-2, 2))


def test_lambda_square_exact_ratio_across_types():
    # B_2 on logs (2L, L) against A_1 on logs (L, -L), L = log 2:
    # 6 * 5L^2 over 8L^2 = 15/4, and division of enclosures must keep it
    a1 = lambda_gamma(SplitTorusElement(RootSystemType("A", 1), (2, Fraction(1, 2))))
    b2 = lambda_gamma(SplitTorusElement(RootSystemType("B", 2), (4, 2)))
    ratio = b2.squared / a1.squared
    assert ratio.lo <= Fraction(15, 4) <= ratio.hi


def test_lambda_bc_ratio_matches_exact_formula():
    c2 = lambda_gamma(SplitTorusElement(RootSystemType("C", 2), (4, 2)))
    b2 = lambda_gamma(SplitTorusElement(RootSystemType("B", 2), (4, 2)))
    ratio = c2.squared / b2.squared
    expected = bc_scaling_check(2, [1, 1])
    assert ratio.lo <= expected <= ratio.hi


def test_torus_element_validation():
    a1 = RootSystemType("A", 1)
    with pytest.raises(DimensionMismatch):
        SplitTorusElement(a1, (2,))
    with pytest.raises(ValidationError):
        SplitTorusElement(a1, (2, 2))  # product must be 1 for family A
    with pytest.raises(ValidationError):
        SplitTorusElement(RootSystemType("B", 2), (0, 2))


def test_bc_scaling_values_and_gates():
    assert bc_scaling_check(2, [1, 1]) == 2
    assert bc_scaling_check(3, [1, 2, 0]) == Fraction(8, 5)
    assert bc_scaling_check(4, [1, 0, 0, 0]) == Fraction(10, 7)
    with pytest.raises(ZeroVector):
        bc_scaling_check(2, [0, 0])
    with pytest.raises(DimensionMismatch):
        bc_scaling_check(3, [1, 2])


# ---------------------------------------------------------------------------
# word-ball spectra


def test_spectrum_of_a_cyclic_ball():
    sample = rational_length_spectrum([GAMMA], 3)
    words = [w for w, _ in sample.entries]
    assert words == [(1,), (1, 1), (1, 1, 1)]
    minpolys = [gl.t.minpoly for _, gl in sample.entries]
    assert minpolys == [
        PolyQ.from_coeffs([1, -3, 1]),
        PolyQ.from_coeffs([1, -7, 1]),
        PolyQ.from_coeffs([1, -18, 1]),
    ]


def test_spectrum_deduplicates_by_eigenvalue():
    # with two parabolic generators only g1*g2 (and conjugates/inverses
    # sharing its eigenvalue) is hyperbolic at length 2
    sample = rational_length_spectrum([[[1, 2], [0, 1]], [[1, 0], [2, 1]]], 2)
    assert len(sample.entries) == 1
    word, length = sample.entries[0]
    assert word == (1, 2)
    assert length.t.minpoly == PolyQ.from_coeffs([1, -6, 1])


def test_spectrum_words_are_freely_reduced():
    sample = rational_length_spectrum([GAMMA], 4)
    for word, _ in sample.entries:
        assert all(a != -b for a, b in zip(word, word[1:]))


def test_spectrum_validation():
    with pytest.raises(ValidationError):
        rational_length_spectrum([GAMMA], -1)
    with pytest.raises(ValidationError):
        rational_length_spectrum([], 3)


def test_spectrum_accepts_elements_and_rows():
    as_rows = rational_length_spectrum([GAMMA], 2)
    as_elems = rational_length_spectrum([SemisimpleElement.from_rows(GAMMA)], 2)
    assert [w for w, _ in as_rows.entries] == [w for w, _ in as_elems.entries]


# ---------------------------------------------------------------------------
# ratio rationality


def test_power_ratio_is_rational():
    sample = rational_length_spectrum([GAMMA], 3)
    base = sample.entries[0][1]
    cube = sample.entries[2][1]
    verdict = ratio_rational(base, cube, bound=10)
    assert verdict.is_rational and (verdict.m, verdict.n) == (3, 1)
    reverse = ratio_rational(cube, base, bound=10)
    assert reverse.is_rational and (reverse.m, reverse.n) == (1, 3)


def test_equal_lengths_have_unit_ratio():
    a = hyperbolic_length(GAMMA)
    verdict = ratio_rational(a, hyperbolic_length(GAMMA), bound=5)
    assert verdict.is_rational and (verdict.m, verdict.n) == (1, 1)


def test_independent_lengths_yield_bounded_no():
    a = hyperbolic_length(GAMMA)  # logs of (3+sqrt5)/2
    b = hyperbolic_length([[4, 1], [-1, 0]])  # logs of 2+sqrt3
    verdict = ratio_rational(a, b, bound=8)
    assert not verdict.is_rational
    assert verdict.kind == "NoUpToBound" and verdict.m is None


def test_ratio_bound_validation():
    a = hyperbolic_length(GAMMA)
    with pytest.raises(ValidationError):
        ratio_rational(a, a, bound=0)


def test_sample_commensurability_aggregate():
    short = rational_length_spectrum([GAMMA], 2)
    longer = rational_length_spectrum([GAMMA], 3)
    result = length_commensurable_samples(short, longer, bound=10)
    assert result.aggregate
    assert len(result.verdicts) == 2 and len(result.verdicts[0]) == 3

    other = rational_length_spectrum([[[4, 1], [-1, 0]]], 2)
    assert not length_commensurable_samples(short, other, bound=6).aggregate


def test_sample_commensurability_needs_entries():
    parabolic = rational_length_spectrum([[[1, 1], [0, 1]]], 2)
    with pytest.raises(ValidationError):
        length_commensurable_samples(parabolic, parabolic)
