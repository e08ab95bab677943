"""Exact algebraic numbers: isolation, products, roots of unity, logs."""

from fractions import Fraction

import pytest

from commensura.exactnum import (
    AlgebraicNumber,
    PolyQ,
    algebraic_product,
    equals_one,
    matrix_charpoly,
    roots_of,
)
from commensura.weakcomm import SemisimpleElement


def test_from_rational_round_trip():
    x = AlgebraicNumber.from_rational(Fraction(-7, 3))
    assert x.minpoly == PolyQ.from_coeffs([Fraction(7, 3), 1])
    assert equals_one(AlgebraicNumber.from_rational(1))
    assert not equals_one(x)


def test_matrix_charpoly_companion():
    # companion of t^2 - 4t + 1
    cp = matrix_charpoly([[4, 1], [-1, 0]])
    assert cp == PolyQ.from_coeffs([1, -4, 1])


def test_eigenvalues_of_integer_matrix():
    el = SemisimpleElement.from_rows([[4, 1], [-1, 0]])
    evs = el.eigenvalues()
    assert len(evs) == 2
    assert {ev.minpoly for ev in evs} == {PolyQ.from_coeffs([1, -4, 1])}
    # 2 + sqrt(3) is the one outside the unit circle
    big = max(evs, key=lambda ev: ev.abs_log_interval(32).lo)
    enc = big.abs_log_interval(64)
    # log(2 + sqrt 3) = 1.31695789692481...: pin the leading digits
    assert Fraction("1.3169578") < enc.lo
    assert enc.hi < Fraction("1.3169579")
    assert enc.width < Fraction(1, 2**48)


def test_roots_of_quadratic_are_conjugate():
    roots = roots_of(PolyQ.from_coeffs([-1, -1, 1]))
    assert len(roots) == 2
    prod = algebraic_product([(roots[0], 1), (roots[1], 1)])
    # golden ratio times its conjugate is -1
    assert prod.minpoly == PolyQ.from_coeffs([1, 1])


def test_product_with_exponents_cancels():
    (root,) = [
        r
        for r in roots_of(PolyQ.from_coeffs([1, -3, 1]))
        if r.abs_log_interval(16).lo > 0
    ]
    one = algebraic_product([(root, 3), (root, -3)])
    assert equals_one(one)


def test_root_of_unity_detection():
    i_root = [r for r in roots_of(PolyQ.from_coeffs([1, 0, 1]))][0]
    assert i_root.root_of_unity_order() == 4
    assert i_root.exact_turn() in (Fraction(1, 4), Fraction(3, 4))
    minus_one = AlgebraicNumber.from_rational(-1)
    assert minus_one.root_of_unity_order() == 2
    golden = roots_of(PolyQ.from_coeffs([-1, -1, 1]))[0]
    assert golden.root_of_unity_order() is None


def test_rational_roots_of_unity_only_pm_one():
    assert AlgebraicNumber.from_rational(1).root_of_unity_order() == 1
    assert AlgebraicNumber.from_rational(2).root_of_unity_order() is None


def test_abs_log_interval_of_unit_norm_pair():
    # the two roots of t^2 - 3t + 1 have logs summing to zero
    r1, r2 = roots_of(PolyQ.from_coeffs([1, -3, 1]))
    s = r1.abs_log_interval(64) + r2.abs_log_interval(64)
    assert s.contains(0)


def test_turn_interval_of_negative_real():
    enc = AlgebraicNumber.from_rational(-2).turn_interval(48)
    assert enc.contains(Fraction(1, 2))
    assert enc.width < Fraction(1, 2**40)


def test_degree_cap_guards_blowup():
    from commensura.errors import DegreeTooLarge
    from commensura.exactnum.algebraic import MINPOLY_DEGREE_CAP

    too_big = PolyQ.from_coeffs([3] + [0] * MINPOLY_DEGREE_CAP + [1])
    with pytest.raises(DegreeTooLarge):
        roots_of(too_big)
