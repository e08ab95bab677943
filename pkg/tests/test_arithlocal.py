"""Place-by-place arithmetic: Hilbert symbols, Witt indices, twins tables.

The Hilbert symbol gets the law-level treatment (symmetry, square
invariance, bimultiplicativity, the product formula) because everything
downstream — quaternion ramification, Hasse invariants, the twins
verdict — is built out of it.
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from commensura.arithlocal import (
    PalindromicEtale,
    PlaceQ,
    QuadraticFormQ,
    QuaternionAlgebraQ,
    bc_torus_correspondence,
    fixed_dimension,
    hilbert_symbol,
    quaternion_splits,
    relevant_places,
    twins,
    witt_index,
)
from commensura.errors import (
    BadDimension,
    BadPrime,
    NotPalindromic,
    NotSquarefree,
    ValidationError,
)
from commensura.exactnum import PolyQ

INF = PlaceQ.infinite()
PLACES = [INF, PlaceQ.finite(2), PlaceQ.finite(3), PlaceQ.finite(5), PlaceQ.finite(7)]

nonzero_rationals = st.fractions(
    min_value=-30, max_value=30, max_denominator=12
).filter(lambda q: q != 0)


def form(*diag):
    return QuadraticFormQ(tuple(Fraction(c) for c in diag))


# ---------------------------------------------------------------------------
# places and input validation


def test_place_basics():
    assert INF.is_infinite and str(INF) == "oo"
    assert str(PlaceQ.finite(7)) == "7" and not PlaceQ.finite(7).is_infinite
    with pytest.raises(BadPrime):
        PlaceQ.finite(4)


def test_form_validation():
    assert form(1, "1/2", -3).dimension == 3
    with pytest.raises(ValidationError):
        form(1, 0, 2)
    with pytest.raises(ValidationError):
        QuadraticFormQ(())


def test_quaternion_validation():
    with pytest.raises(ValidationError):
        QuaternionAlgebraQ(Fraction(0), Fraction(1))


def test_relevant_places():
    assert [str(v) for v in relevant_places([Fraction(5, 3)])] == ["oo", "2", "3", "5"]
    assert [str(v) for v in relevant_places([])] == ["oo", "2"]


# ---------------------------------------------------------------------------
# the Hilbert symbol


def test_symbol_known_values():
    assert hilbert_symbol(-1, -1, INF) == -1
    assert hilbert_symbol(-1, -1, PlaceQ.finite(2)) == -1
    assert hilbert_symbol(-1, -1, PlaceQ.finite(3)) == 1
    assert hilbert_symbol(2, 3, PlaceQ.finite(2)) == -1
    for v in PLACES:
        assert hilbert_symbol(1, 17, v) == 1  # 1 is a norm from everywhere


@given(a=nonzero_rationals, b=nonzero_rationals, v=st.sampled_from(PLACES))
@settings(max_examples=80, deadline=None)
def test_symbol_symmetry_and_square_invariance(a, b, v):
    assert hilbert_symbol(a, b, v) == hilbert_symbol(b, a, v)
    assert hilbert_symbol(a * 9, b, v) == hilbert_symbol(a, b, v)
    assert hilbert_symbol(a * Fraction(1, 4), b, v) == hilbert_symbol(a, b, v)


@given(
    a1=nonzero_rationals,
    a2=nonzero_rationals,
    b=nonzero_rationals,
    v=st.sampled_from(PLACES),
)
@settings(max_examples=80, deadline=None)
def test_symbol_bimultiplicative(a1, a2, b, v):
    assert hilbert_symbol(a1 * a2, b, v) == hilbert_symbol(a1, b, v) * hilbert_symbol(
        a2, b, v
    )


@given(a=nonzero_rationals, b=nonzero_rationals)
@settings(max_examples=80, deadline=None)
def test_symbol_product_formula(a, b):
    product = 1
    for v in relevant_places([a, b]):
        product *= hilbert_symbol(a, b, v)
    assert product == 1


# ---------------------------------------------------------------------------
# Witt indices


def test_hyperbolic_plane_everywhere():
    h = form(1, -1)
    for v in PLACES:
        assert witt_index(h, v) == 1


def test_real_witt_index_is_smaller_signature():
    assert witt_index(form(1, 1, -1), INF) == 1
    assert witt_index(form(1, 1, 1, 1, -1, -1, -1), INF) == 3
    assert witt_index(form(1, 1, 1), INF) == 0


def test_sum_of_three_squares_is_anisotropic_only_at_two():
    q = form(1, 1, 1)
    assert witt_index(q, PlaceQ.finite(2)) == 0
    assert witt_index(q, PlaceQ.finite(3)) == 1
    assert witt_index(q, PlaceQ.finite(5)) == 1


def test_balanced_seven_dimensional_form():
    q = form(1, 1, 1, 1, -1, -1, -1)
    for v in (INF, PlaceQ.finite(2), PlaceQ.finite(3)):
        assert witt_index(q, v) == 3


def test_definite_form_splits_at_finite_places():
    q = form(1, 1, 1, 1, 1, 1, 1)
    assert witt_index(q, INF) == 0
    assert witt_index(q, PlaceQ.finite(2)) == 3  # >= 5 dims are isotropic


@given(
    diag=st.lists(nonzero_rationals, min_size=1, max_size=4),
    c=nonzero_rationals,
    v=st.sampled_from(PLACES),
)
@settings(max_examples=60, deadline=None)
def test_appending_a_hyperbolic_plane_adds_one(diag, c, v):
    q = QuadraticFormQ(tuple(diag))
    extended = QuadraticFormQ(tuple(diag) + (c, -c))
    assert witt_index(extended, v) == witt_index(q, v) + 1


# ---------------------------------------------------------------------------
# quaternions and twins


def test_hamilton_quaternions_ramify_at_two_and_infinity():
    ham = QuaternionAlgebraQ(Fraction(-1), Fraction(-1))
    assert not quaternion_splits(ham, INF)
    assert not quaternion_splits(ham, PlaceQ.finite(2))
    for p in (3, 5, 7):
        assert quaternion_splits(ham, PlaceQ.finite(p))


def test_ramification_set_has_even_size():
    h = QuaternionAlgebraQ(Fraction(-1), Fraction(-3))
    ramified = [str(v) for v in relevant_places([-1, -3]) if not quaternion_splits(h, v)]
    assert ramified == ["oo", "3"]


def test_twins_split_everywhere():
    verdict = twins(
        form(1, 1, 1, 1, -1, -1, -1), QuaternionAlgebraQ(Fraction(1), Fraction(1)), False
    )
    assert verdict.twins and bool(verdict)
    assert [str(r.place) for r in verdict.table] == ["oo", "2"]
    for row in verdict.table:
        assert (row.b_split, row.b_anisotropic, row.c_split, row.c_anisotropic) == (
            True,
            False,
            True,
            False,
        )
        assert row.agree


def test_twins_fail_at_two_despite_matching_at_infinity():
    # definite form against Hamilton quaternions: both anisotropic over R,
    # but at p = 2 the 7-dimensional form splits while the algebra ramifies
    verdict = twins(
        form(1, 1, 1, 1, 1, 1, 1), QuaternionAlgebraQ(Fraction(-1), Fraction(-1)), True
    )
    assert not verdict.twins
    by_place = {str(r.place): r for r in verdict.table}
    assert by_place["oo"].agree
    assert by_place["oo"].b_anisotropic and by_place["oo"].c_anisotropic
    assert not by_place["2"].agree
    assert by_place["2"].b_split and not by_place["2"].c_split


def test_twins_fail_at_infinity():
    verdict = twins(
        form(1, 1, 1, 1, -1, -1, -1), QuaternionAlgebraQ(Fraction(-1), Fraction(-1)), True
    )
    assert not verdict.twins
    assert not any(row.agree for row in verdict.table)


def test_twins_dimension_gate():
    with pytest.raises(BadDimension):
        twins(form(1, 1, 1, 1, 1), QuaternionAlgebraQ(Fraction(1), Fraction(1)), False)
    with pytest.raises(BadDimension):
        twins(
            form(1, 1, 1, 1, -1, -1, -1, -1),
            QuaternionAlgebraQ(Fraction(1), Fraction(1)),
            False,
        )


# ---------------------------------------------------------------------------
# the torus correspondence


QUARTIC = PolyQ.from_coeffs([1, -3, 1, -3, 1])


def test_bc_correspondence_adjoins_fixed_line():
    quintic = bc_torus_correspondence(QUARTIC)
    assert quintic.coeffs == tuple(
        Fraction(c) for c in (-1, 4, -4, 4, -4, 1)
    )
    assert quintic(Fraction(1)) == 0


def test_bc_accepts_etale_wrapper_and_normalizes():
    etale = PalindromicEtale(PolyQ.from_coeffs([2, -6, 2]))
    assert etale.poly == PolyQ.from_coeffs([1, -3, 1])
    assert bc_torus_correspondence(etale).coeffs == tuple(
        Fraction(c) for c in (-1, 4, -4, 1)
    )


def test_etale_rejects_bad_inputs():
    with pytest.raises(NotPalindromic):
        PalindromicEtale(PolyQ.from_coeffs([-1, 0, 1]))  # t^2 - 1 is anti
    with pytest.raises(NotPalindromic):
        PalindromicEtale(PolyQ.from_coeffs([-1, -1, 0, 1]))
    with pytest.raises(NotSquarefree):
        PalindromicEtale(PolyQ.from_coeffs([1, -2, 1]))


def test_fixed_dimension_values():
    assert fixed_dimension(QUARTIC) == 2
    assert fixed_dimension(bc_torus_correspondence(QUARTIC)) == 3
    # anti-palindromic of even degree: both +-1 are fixed roots
    assert fixed_dimension(PolyQ.from_coeffs([-1, 0, 1])) == 2
    assert fixed_dimension(PolyQ.from_coeffs([-1, 4, -4, 1])) == 2


@pytest.mark.parametrize(
    "coeffs",
    [(1, -3, 1, -3, 1), (1, -1, 1, -1, 1), (1, 0, -1, 0, 1), (1, -3, 1)],
)
def test_correspondence_grows_fixed_dimension_by_one(coeffs):
    f = PolyQ.from_coeffs(coeffs)
    assert fixed_dimension(bc_torus_correspondence(f)) == fixed_dimension(f) + 1


def test_fixed_dimension_rejects_asymmetric_input():
    with pytest.raises(NotPalindromic):
        fixed_dimension(PolyQ.from_coeffs([-1, -1, 0, 1]))
    with pytest.raises(NotSquarefree):
        fixed_dimension(PolyQ.from_coeffs([1, -2, 1]))
