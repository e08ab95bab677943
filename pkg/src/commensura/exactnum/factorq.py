"""Factorization over Q via a lifted mod-p factorization.

The classic route: make the squarefree part monic over Z, factor it
modulo a prime where it stays squarefree, Hensel-lift the factors to a
modulus beyond the Landau-Mignotte coefficient bound, then recombine
subsets of lifted factors in a fixed deterministic order.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from typing import List, Tuple

from .. import _kernels as K
from ..errors import DegreeTooLarge
from .modp import factor_mod_p, is_prime
from .polyq import PolyQ, gcd_poly

DEGREE_CAP = 24


def _symmetric(c: int, modulus: int) -> int:
    c %= modulus
    return c - modulus if c > modulus // 2 else c


def _poly_mul_mod(a: List[int], b: List[int], modulus: int) -> List[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % modulus
    return out


def _poly_rem_monic(a: List[int], b: List[int], modulus: int) -> List[int]:
    """Remainder of a by monic b, coefficients mod modulus."""
    rem = [c % modulus for c in a]
    db = len(b) - 1
    for k in range(len(rem) - 1 - db, -1, -1):
        coef = rem[k + db]
        if coef:
            for i, bc in enumerate(b):
                rem[k + i] = (rem[k + i] - coef * bc) % modulus
    return rem[:db]


def _bezout_mod_p(a: List[int], b: List[int], p: int) -> Tuple[List[int], List[int]]:
    """s, t with s*a + t*b = 1 mod p for coprime a, b."""
    r0, r1 = [c % p for c in a], [c % p for c in b]
    s0, s1 = [1], [0]
    t0, t1 = [0], [1]
    while K.poly_trim(list(r1)):
        q = _poly_quo_mod_p(r0, r1, p)
        r0, r1 = r1, _poly_sub(r0, K.poly_mul(q, r1, p), p)
        s0, s1 = s1, _poly_sub(s0, K.poly_mul(q, s1, p), p)
        t0, t1 = t1, _poly_sub(t0, K.poly_mul(q, t1, p), p)
    r0 = K.poly_trim(r0)
    if len(r0) != 1:
        raise ArithmeticError("inputs not coprime mod p")
    inv = pow(r0[0], -1, p)
    return [c * inv % p for c in s0], [c * inv % p for c in t0]


def _poly_sub(a: List[int], b: List[int], p: int) -> List[int]:
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return K.poly_trim([(x - y) % p for x, y in zip(a, b)])


def _poly_quo_mod_p(a: List[int], b: List[int], p: int) -> List[int]:
    a = K.poly_trim([c % p for c in a])
    b = K.poly_trim([c % p for c in b])
    db = len(b) - 1
    if len(a) - 1 < db:
        return []
    inv = pow(b[-1], -1, p)
    rem = list(a)
    quo = [0] * (len(a) - db)
    for k in range(len(a) - 1 - db, -1, -1):
        coef = rem[k + db] * inv % p
        quo[k] = coef
        if coef:
            for i, bc in enumerate(b):
                rem[k + i] = (rem[k + i] - coef * bc) % p
    return K.poly_trim(quo)


def _hensel_pair(
    f: List[int], a: List[int], b: List[int], p: int, k: int
) -> Tuple[List[int], List[int]]:
    """Lift monic f = a*b from mod p to mod p^k (a, b monic, coprime mod p)."""
    s, t = _bezout_mod_p(a, b, p)
    a = [c % p for c in a]
    b = [c % p for c in b]
    modulus = p
    for _ in range(k - 1):
        new_modulus = modulus * p
        prod = _poly_mul_mod(a, b, new_modulus)
        err = [(x - y) % new_modulus for x, y in itertools.zip_longest(f, prod, fillvalue=0)]
        e = [(c // modulus) % p for c in err]
        da = _poly_rem_monic(K.poly_mul(t, e, p), a, p)
        db = _poly_rem_monic(K.poly_mul(s, e, p), b, p)
        a = [
            (x + modulus * y) % new_modulus
            for x, y in itertools.zip_longest(a, da + [0], fillvalue=0)
        ]
        b = [
            (x + modulus * y) % new_modulus
            for x, y in itertools.zip_longest(b, db + [0], fillvalue=0)
        ]
        a, b = [c % new_modulus for c in a[: len(a)]], [c % new_modulus for c in b]
        modulus = new_modulus
    return K.poly_trim(a), K.poly_trim(b)


def _hensel_lift_list(
    f: List[int], factors: List[List[int]], p: int, k: int
) -> List[List[int]]:
    """Lift the monic factorization f = prod(factors) mod p to mod p^k."""
    if len(factors) == 1:
        modulus = p**k
        return [[c % modulus for c in f]]
    half = len(factors) // 2
    left, right = factors[:half], factors[half:]
    a = [1]
    for g in left:
        a = K.poly_mul(a, g, p)
    b = [1]
    for g in right:
        b = K.poly_mul(b, g, p)
    a_lift, b_lift = _hensel_pair(f, a, b, p, k)
    return _hensel_lift_list(a_lift, left, p, k) + _hensel_lift_list(b_lift, right, p, k)


def _mignotte_bound(coeffs: List[int]) -> int:
    n = len(coeffs) - 1
    norm = math.isqrt(sum(c * c for c in coeffs)) + 1
    return (2**n) * norm * abs(coeffs[-1])


def _divides_exactly(candidate: PolyQ, f: PolyQ) -> bool:
    q, r = divmod(f, candidate)
    return r.is_zero and all(c.denominator == 1 for c in q.coeffs)


def _factor_squarefree_monic(g: PolyQ) -> List[PolyQ]:
    """Irreducible monic integer factors of a squarefree monic integer poly."""
    n = g.degree
    if n <= 1:
        return [g]
    if n > DEGREE_CAP:
        raise DegreeTooLarge(f"degree {n} exceeds the factorization cap {DEGREE_CAP}")
    ints = [int(c) for c in g.coeffs]

    chosen: List[List[int]] | None = None
    chosen_p = 0
    usable = 0
    p = 2
    while usable < 3:
        if is_prime(p):
            fac = factor_mod_p(g, p)
            if fac.is_squarefree():
                usable += 1
                if chosen is None or len(fac.factors) < len(chosen):
                    chosen = [list(c) for c, _ in fac.factors]
                    chosen_p = p
                if len(fac.factors) == 1:
                    return [g]
        p += 1 if p == 2 else 2
    assert chosen is not None
    mod_factors = chosen
    p = chosen_p

    bound = 2 * _mignotte_bound(ints) + 1
    k = 1
    while p**k < bound:
        k += 1
    modulus = p**k
    lifted = _hensel_lift_list([c % modulus for c in ints], mod_factors, p, k)

    result: List[PolyQ] = []
    remaining = list(range(len(lifted)))
    current = g
    size = 1
    while 2 * size <= len(remaining):
        found = True
        while found:
            found = False
            for combo in itertools.combinations(remaining, size):
                prod = [1]
                for idx in combo:
                    prod = _poly_mul_mod(prod, lifted[idx], modulus)
                candidate = PolyQ.from_coeffs([_symmetric(c, modulus) for c in prod])
                if candidate.degree < 1:
                    continue
                if _divides_exactly(candidate, current):
                    result.append(candidate)
                    current = current // candidate
                    remaining = [i for i in remaining if i not in combo]
                    found = True
                    break
            if 2 * size > len(remaining):
                break
        size += 1
    if current.degree > 0:
        result.append(current)
    return result


def _squarefree_decomposition_q(f: PolyQ) -> List[Tuple[PolyQ, int]]:
    """Yun's algorithm over Q: pairwise-coprime monic squarefree parts."""
    out: List[Tuple[PolyQ, int]] = []
    f = f.monic()
    fp = f.derivative()
    c = gcd_poly(f, fp)
    w = f // c
    y = fp // c
    i = 1
    while w.degree > 0:
        d = y - w.derivative()
        z = gcd_poly(w, d)
        if z.degree > 0:
            out.append((z, i))
        w, y = w // z, d // z
        i += 1
    return out


def factor_over_q(f: PolyQ) -> Tuple[Fraction, Tuple[Tuple[PolyQ, int], ...]]:
    """f = constant * prod(factor^mult) with monic irreducible factors."""
    if f.is_zero:
        raise ValueError("cannot factor the zero polynomial")
    if f.degree == 0:
        return f.lc, ()
    constant = f.lc
    out: List[Tuple[PolyQ, int]] = []
    for part, mult in _squarefree_decomposition_q(f.monic()):
        # Monicize over Z: G(t) = l^(n-1) part(t/l) for l the cleared lc.
        _, ints = part.integer_form()
        l = ints[-1]
        n = len(ints) - 1
        monic_ints = [c * l ** (n - 1 - i) if i < n else 1 for i, c in enumerate(ints)]
        g = PolyQ.from_coeffs(monic_ints)
        for factor in _factor_squarefree_monic(g):
            # Undo the substitution t -> l t and renormalize to monic.
            back = PolyQ.from_coeffs(
                [c * Fraction(l) ** i for i, c in enumerate(factor.coeffs)]
            ).monic()
            out.append((back, mult))
    out.sort(key=lambda fm: (fm[0].degree, fm[0].coeffs, fm[1]))
    return constant, tuple(out)


def is_irreducible_over_q(f: PolyQ) -> bool:
    """Irreducibility over Q (for the monic normalization of f)."""
    if f.degree < 1:
        return False
    if f.degree == 1:
        return True
    if not f.is_squarefree():
        return False
    _, factors = factor_over_q(f)
    return len(factors) == 1
