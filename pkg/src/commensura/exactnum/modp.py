"""Factorization of rational polynomials modulo a prime.

The distinct-degree / equal-degree decomposition runs on the kernel
primitives from ``commensura._kernels`` (compiled when available).  The
equal-degree split enumerates candidate polynomials in a fixed order,
so results are deterministic, and factors are reported monic in a
canonical sort: by degree, then by coefficient tuple.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence, Tuple

from .. import _kernels as K
from ..errors import BadPrime
from .polyq import PolyQ

ModPoly = Tuple[int, ...]


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid far beyond any budget used here."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_up_to(n: int) -> list[int]:
    """All primes <= n by a straightforward sieve."""
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, math.isqrt(n) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return [i for i, flag in enumerate(sieve) if flag]


@dataclass(frozen=True)
class FactorizationModP:
    """Monic irreducible factors (with multiplicity) of f mod p.

    ``lead`` is the leading unit, so lead * prod(factor^mult) == f mod p.
    """

    p: int
    lead: int
    factors: Tuple[Tuple[ModPoly, int], ...]

    @property
    def degrees(self) -> Tuple[int, ...]:
        """Factor degrees with multiplicity, descending."""
        out: list[int] = []
        for coeffs, mult in self.factors:
            out.extend([len(coeffs) - 1] * mult)
        return tuple(sorted(out, reverse=True))

    def is_squarefree(self) -> bool:
        return all(mult == 1 for _, mult in self.factors)


def reduce_poly_mod_p(f: PolyQ, p: int) -> list[int]:
    """Integer coefficient list of f mod p; BadPrime when p divides a
    denominator or the leading coefficient of the cleared form."""
    if f.is_zero:
        return []
    _, ints = f.integer_form()
    if any(c.denominator % p == 0 for c in f.coeffs):
        raise BadPrime(f"p={p} divides a coefficient denominator")
    if ints[-1] % p == 0:
        raise BadPrime(f"p={p} kills the leading coefficient")
    return [c % p for c in ints]


def _derivative_mod(a: Sequence[int], p: int) -> list[int]:
    return K.poly_trim([i * c % p for i, c in enumerate(a) if i > 0])


def _monic(a: Sequence[int], p: int) -> list[int]:
    if not a:
        return []
    inv = pow(a[-1], -1, p)
    return [c * inv % p for c in a]


def _poly_div_exact(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    rem = [c for c in a]
    db = len(b) - 1
    inv_lead = pow(b[-1], -1, p)
    quot = [0] * (len(rem) - db)
    for k in range(len(rem) - 1 - db, -1, -1):
        coef = rem[k + db] * inv_lead % p
        quot[k] = coef
        if coef:
            for i, bc in enumerate(b):
                rem[k + i] = (rem[k + i] - coef * bc) % p
    if K.poly_trim(rem):
        raise ArithmeticError("division was not exact")
    return K.poly_trim(quot)


def _squarefree_decomposition(a: list[int], p: int) -> list[Tuple[list[int], int]]:
    """Yun-style squarefree decomposition over F_p, handling p-th powers."""
    out: list[Tuple[list[int], int]] = []

    def rec(f: list[int], outer_mult: int) -> None:
        if len(f) - 1 <= 0:
            return
        fp = _derivative_mod(f, p)
        if not fp:
            # f is a p-th power: f(t) = g(t^p) with g drawn from every
            # p-th coefficient (Frobenius fixes the prime field).
            g = K.poly_trim([f[i] for i in range(0, len(f), p)])
            rec(g, outer_mult * p)
            return
        c = K.poly_gcd(f, fp, p)
        w = _poly_div_exact(f, c, p)
        i = 1
        while len(w) - 1 > 0:
            y = K.poly_gcd(w, c, p)
            z = _poly_div_exact(w, y, p)
            if len(z) - 1 > 0:
                out.append((z, i * outer_mult))
            c = _poly_div_exact(c, y, p)
            w = y
            i += 1
        if len(c) - 1 > 0:
            rec(c, outer_mult)

    rec(_monic(a, p), 1)
    return out


def _sub_one(h: Sequence[int], p: int) -> list[int]:
    out = list(h) or [0]
    out[0] = (out[0] - 1) % p
    return K.poly_trim(out)


def _sub_t(h: Sequence[int], p: int) -> list[int]:
    out = list(h) + [0] * max(0, 2 - len(h))
    out[1] = (out[1] - 1) % p
    return K.poly_trim(out)


def _candidate_polys(p: int, max_degree: int):
    """All monic polynomials of degree 1..max_degree-1 in a fixed order."""
    for deg in range(1, max(max_degree, 2)):
        for counter in range(p**deg):
            coeffs = []
            c = counter
            for _ in range(deg):
                coeffs.append(c % p)
                c //= p
            yield coeffs + [1]


def _equal_degree_split(f: list[int], d: int, p: int) -> list[list[int]]:
    """Split a product of distinct irreducibles of equal degree d."""
    n = len(f) - 1
    if n == d:
        return [f]
    for cand in _candidate_polys(p, n):
        if p == 2:
            # Trace map over F_{2^d}.
            acc = K.poly_rem(cand, f, p)
            trace = acc
            for _ in range(d - 1):
                acc = K.poly_rem(K.poly_mul(acc, acc, p), f, p)
                trace = K.poly_trim([(x + y) % p for x, y in _padded(trace, acc)])
            g = K.poly_gcd(trace, f, p)
        else:
            e = (p**d - 1) // 2
            h = K.poly_powmod(cand, e, f, p)
            g = K.poly_gcd(_sub_one(h, p), f, p)
        if 0 < len(g) - 1 < n:
            rest = _poly_div_exact(f, g, p)
            return _equal_degree_split(_monic(g, p), d, p) + _equal_degree_split(
                _monic(rest, p), d, p
            )
    raise AssertionError("equal-degree split exhausted all candidates")


def _padded(a: Sequence[int], b: Sequence[int]):
    n = max(len(a), len(b))
    return zip(list(a) + [0] * (n - len(a)), list(b) + [0] * (n - len(b)))


def _distinct_degree(f: list[int], p: int) -> list[Tuple[list[int], int]]:
    """Pairs (product of irreducibles of degree d, d) for squarefree monic f."""
    out: list[Tuple[list[int], int]] = []
    h = [0, 1]  # t
    v = f
    d = 0
    while len(v) - 1 >= 2 * (d + 1):
        d += 1
        h = K.poly_powmod(h, p, v, p)
        g = K.poly_gcd(_sub_t(h, p), v, p)
        if len(g) - 1 > 0:
            out.append((g, d))
            v = _poly_div_exact(v, g, p)
            h = K.poly_rem(h, v, p)
    if len(v) - 1 > 0:
        out.append((v, len(v) - 1))
    return out


def factor_mod_p(f: PolyQ, p: int) -> FactorizationModP:
    """Full factorization of f mod p into monic irreducibles."""
    if not is_prime(p):
        raise BadPrime(f"{p} is not prime")
    a = reduce_poly_mod_p(f, p)
    if not a:
        raise ValueError("cannot factor the zero polynomial")
    lead = a[-1]
    if len(a) == 1:
        return FactorizationModP(p, lead, ())
    factors: list[Tuple[ModPoly, int]] = []
    for part, mult in _squarefree_decomposition(a, p):
        for prod, d in _distinct_degree(part, p):
            for irr in _equal_degree_split(prod, d, p):
                factors.append((tuple(irr), mult))
    factors.sort(key=lambda fm: (len(fm[0]), fm[0]))
    return FactorizationModP(p, lead, tuple(factors))
