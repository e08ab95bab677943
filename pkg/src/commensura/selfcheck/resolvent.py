"""Splitting-field Galois groups in degree <= 4 by resolvent formulas.

This is the classical closed-form route: discriminant squareness for
cubics, the resolvent cubic plus the Kappe-Warren criterion for
quartics.  It never looks at factorizations modulo primes, which makes
it a genuinely independent check on the Frobenius-sampling certifier.
"""

from fractions import Fraction
from math import isqrt
from typing import Union

from ..errors import NotPalindromic, NotSquarefree, ValidationError
from ..exactnum import PolyQ, discriminant, factor_over_q, is_irreducible_over_q

_T_MINUS_ONE = PolyQ.from_coeffs([-1, 1])


def _is_rational_square(q: Union[Fraction, int]) -> bool:
    q = Fraction(q)
    if q < 0:
        return False
    rn, rd = isqrt(q.numerator), isqrt(q.denominator)
    return rn * rn == q.numerator and rd * rd == q.denominator


def cubic_galois(f: PolyQ) -> str:
    """'C3' or 'S3' for a monic irreducible cubic."""
    if f.degree != 3 or not is_irreducible_over_q(f):
        raise ValidationError("the cubic resolvent rule needs an irreducible cubic")
    return "C3" if _is_rational_square(discriminant(f.monic())) else "S3"


def _splits_over_disc_field(delta: Fraction, disc: Fraction) -> bool:
    """Whether a quadratic with discriminant delta splits over Q(sqrt(disc))."""
    return (
        delta == 0
        or _is_rational_square(delta)
        or _is_rational_square(delta * disc)
    )


def quartic_galois(f: PolyQ) -> str:
    """One of 'C4', 'V4', 'D4', 'A4', 'S4' for a monic irreducible quartic.

    The resolvent cubic y^3 - q y^2 + (pr - 4s) y - (p^2 s - 4 q s + r^2)
    has the root pattern that separates the five transitive subgroups of
    S4; the C4/D4 split uses the Kappe-Warren quadratics over the
    discriminant field.
    """
    if f.degree != 4 or not is_irreducible_over_q(f):
        raise ValidationError("the quartic resolvent rule needs an irreducible quartic")
    g = f.monic()
    s, r, q, p = g.coeffs[0], g.coeffs[1], g.coeffs[2], g.coeffs[3]
    resolvent = PolyQ.from_coeffs(
        [-(p * p * s - 4 * q * s + r * r), p * r - 4 * s, -q, 1]
    )
    _, factors = factor_over_q(resolvent)
    rational_roots = sum(mult for poly, mult in factors if poly.degree == 1)
    if rational_roots == 0:
        return "A4" if _is_rational_square(discriminant(g)) else "S4"
    if rational_roots == 3:
        return "V4"
    beta = next(-poly.coeffs[0] for poly, _ in factors if poly.degree == 1)
    disc = discriminant(g)
    if _splits_over_disc_field(beta * beta - 4 * s, disc) and _splits_over_disc_field(
        p * p - 4 * (q - beta), disc
    ):
        return "C4"
    return "D4"


def _full_for_palindromic(g: PolyQ) -> bool:
    """Whether the splitting field of an even palindromic polynomial has
    the whole hyperoctahedral group of its rank acting."""
    if not g.is_palindromic() or g.degree % 2:
        raise NotPalindromic(f"{g} is not an even palindromic polynomial")
    if g.degree == 2:
        return is_irreducible_over_q(g)
    if g.degree == 4:
        return is_irreducible_over_q(g) and quartic_galois(g) == "D4"
    raise ValidationError("the resolvent oracle stops at rank 2")


def full_weyl_expected(f: PolyQ, family: str) -> bool:
    """Whether the splitting-field Galois group is the full Weyl group.

    Degree caps: 4 for type A, rank 2 for types B/C — exactly the range
    where resolvents decide the group in closed form.
    """
    g = f.monic()
    if not g.is_squarefree():
        raise NotSquarefree(f"{g} has a repeated factor")
    if family == "B":
        if g(Fraction(1)) != 0:
            raise ValidationError("a type-B characteristic polynomial is 1 at t=1")
        return _full_for_palindromic(g // _T_MINUS_ONE)
    if family == "C":
        return _full_for_palindromic(g)
    if family != "A":
        raise ValidationError(f"no resolvent oracle for family {family!r}")
    _, factors = factor_over_q(g)
    if len(factors) != 1 or factors[0][1] != 1:
        return False
    d = g.degree
    if d <= 2:
        return True
    if d == 3:
        return cubic_galois(g) == "S3"
    if d == 4:
        return quartic_galois(g) == "S4"
    raise ValidationError("the resolvent oracle stops at degree 4")
