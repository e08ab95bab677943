"""Multiplicative relations among rationals by unique factorization.

A product of rational eigenvalue powers is pinned down exactly by its
sign and its prime exponent vector, so bounded commensurability
questions reduce to enumerating an exponent box and intersecting sets
of factorization profiles.  No lattices, no precision — the tradeoff is
exponential cost in the number of eigenvalues.
"""

from fractions import Fraction
from itertools import product
from typing import Dict, FrozenSet, Sequence, Tuple

from ..errors import ValidationError, ZeroBase

Profile = Tuple[int, Tuple[Tuple[int, int], ...]]


def _factor_signed(q: Fraction) -> Tuple[int, Dict[int, int]]:
    if q == 0:
        raise ZeroBase("cannot factor zero")
    sign = 1 if q > 0 else -1
    exps: Dict[int, int] = {}
    for value, direction in ((abs(q.numerator), 1), (q.denominator, -1)):
        n = value
        f = 2
        while f * f <= n:
            while n % f == 0:
                exps[f] = exps.get(f, 0) + direction
                n //= f
            f += 1 if f == 2 else 2
        if n > 1:
            exps[n] = exps.get(n, 0) + direction
    return sign, {p: e for p, e in exps.items() if e}


def product_profiles(
    eigs: Sequence[Fraction], bound: int
) -> FrozenSet[Profile]:
    """Profiles of every product prod(eigs[i]**a[i]) with |a_i| <= bound,
    excluding the products equal to 1."""
    if bound < 0:
        raise ValidationError("the exponent bound must be nonnegative")
    factored = [_factor_signed(Fraction(q)) for q in eigs]
    out = set()
    for exps in product(range(-bound, bound + 1), repeat=len(factored)):
        sign = 1
        total: Dict[int, int] = {}
        for a, (s, vec) in zip(exps, factored):
            if a == 0:
                continue
            if s < 0 and a % 2:
                sign = -sign
            for p, e in vec.items():
                total[p] = total.get(p, 0) + a * e
        profile = (sign, tuple(sorted((p, e) for p, e in total.items() if e)))
        if profile != (1, ()):
            out.add(profile)
    return frozenset(out)


def brute_weakly_commensurable(
    eigs1: Sequence[Fraction], eigs2: Sequence[Fraction], bound: int
) -> bool:
    """Whether some bounded eigenvalue-power products coincide and differ
    from 1, decided by exhausting both exponent boxes."""
    return bool(product_profiles(eigs1, bound) & product_profiles(eigs2, bound))
