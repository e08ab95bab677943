"""Dense univariate polynomials over Q.

Coefficients are stored ascending (index = power of t) as a normalized
tuple of Fractions with no trailing zeros.  Everything here is exact;
no floating point enters any code path.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence, Tuple


def _normalize(coeffs: Iterable[Fraction]) -> Tuple[Fraction, ...]:
    out = [Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class PolyQ:
    coeffs: Tuple[Fraction, ...]

    @staticmethod
    def from_coeffs(coeffs: Iterable[Fraction | int | str]) -> "PolyQ":
        return PolyQ(_normalize(Fraction(c) for c in coeffs))

    @staticmethod
    def zero() -> "PolyQ":
        return PolyQ(())

    @staticmethod
    def one() -> "PolyQ":
        return PolyQ.from_coeffs([1])

    @staticmethod
    def x() -> "PolyQ":
        return PolyQ.from_coeffs([0, 1])

    @staticmethod
    def constant(c: Fraction | int) -> "PolyQ":
        return PolyQ.from_coeffs([c])

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> Fraction:
        if self.is_zero:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __call__(self, x: Fraction | int) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: "PolyQ") -> "PolyQ":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return PolyQ(_normalize(out))

    def __neg__(self) -> "PolyQ":
        return PolyQ(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "PolyQ") -> "PolyQ":
        return self + (-other)

    def __mul__(self, other: "PolyQ") -> "PolyQ":
        if self.is_zero or other.is_zero:
            return PolyQ.zero()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return PolyQ(_normalize(out))

    def scale(self, c: Fraction | int) -> "PolyQ":
        c = Fraction(c)
        if c == 0:
            return PolyQ.zero()
        return PolyQ(tuple(a * c for a in self.coeffs))

    def __pow__(self, e: int) -> "PolyQ":
        if e < 0:
            raise ValueError("negative power")
        result = PolyQ.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other: "PolyQ") -> Tuple["PolyQ", "PolyQ"]:
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dn, dd = len(rem) - 1, other.degree
        quot = [Fraction(0)] * max(dn - dd + 1, 0)
        inv_lead = 1 / other.lc
        for k in range(dn - dd, -1, -1):
            q = rem[k + dd] * inv_lead
            quot[k] = q
            if q != 0:
                for i, c in enumerate(other.coeffs):
                    rem[k + i] -= q * c
        return PolyQ(_normalize(quot)), PolyQ(_normalize(rem))

    def __floordiv__(self, other: "PolyQ") -> "PolyQ":
        return divmod(self, other)[0]

    def __mod__(self, other: "PolyQ") -> "PolyQ":
        return divmod(self, other)[1]

    def divides(self, other: "PolyQ") -> bool:
        return (other % self).is_zero

    def derivative(self) -> "PolyQ":
        return PolyQ(_normalize(i * c for i, c in enumerate(self.coeffs) if i > 0))

    def monic(self) -> "PolyQ":
        if self.is_zero:
            return self
        return self.scale(1 / self.lc)

    def reverse(self) -> "PolyQ":
        """t^deg * f(1/t); meaningful when the constant term is nonzero."""
        return PolyQ(_normalize(reversed(self.coeffs)))

    def subst_neg(self) -> "PolyQ":
        """f(-t)."""
        return PolyQ(tuple(c if i % 2 == 0 else -c for i, c in enumerate(self.coeffs)))

    def is_palindromic(self) -> bool:
        return not self.is_zero and self.coeffs == tuple(reversed(self.coeffs))

    def is_anti_palindromic(self) -> bool:
        return not self.is_zero and self.coeffs == tuple(-c for c in reversed(self.coeffs))

    def squarefree_part(self) -> "PolyQ":
        if self.degree <= 0:
            return self.monic()
        g = gcd_poly(self, self.derivative())
        return (self // g).monic()

    def is_squarefree(self) -> bool:
        if self.degree <= 0:
            return not self.is_zero
        return gcd_poly(self, self.derivative()).degree == 0

    def integer_form(self) -> Tuple[Fraction, Tuple[int, ...]]:
        """Write f = content * g with g primitive over Z and positive lc."""
        if self.is_zero:
            return Fraction(0), ()
        denom = math.lcm(*(c.denominator for c in self.coeffs))
        ints = [int(c * denom) for c in self.coeffs]
        g = math.gcd(*(abs(c) for c in ints))
        if ints[-1] < 0:
            g = -g
        return Fraction(g, denom), tuple(c // g for c in ints)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            term = "t" if i == 1 else f"t^{i}" if i > 1 else str(abs(c))
            if i > 0 and abs(c) != 1:
                term = f"{abs(c)}*{term}"
            parts.append(("- " if c < 0 else "+ " if parts else "") + term)
        return " ".join(parts)


def gcd_poly(f: PolyQ, g: PolyQ) -> PolyQ:
    """Monic gcd over Q."""
    a, b = f, g
    while not b.is_zero:
        a, b = b, a % b
    return a.monic() if not a.is_zero else a


def resultant(f: PolyQ, g: PolyQ) -> Fraction:
    """Resultant of f and g, by the Euclidean remainder recurrence."""
    if f.is_zero or g.is_zero:
        if f.degree <= 0 and g.degree <= 0:
            return Fraction(1)
        return Fraction(0)
    m, n = f.degree, g.degree
    if n == 0:
        return g.lc**m
    if m == 0:
        return f.lc**n
    r = f % g
    if r.is_zero:
        return Fraction(0)
    sign = -1 if (m * n) % 2 else 1
    return sign * g.lc ** (m - r.degree) * resultant(g, r)


def discriminant(f: PolyQ) -> Fraction:
    """disc(f) = (-1)^(d(d-1)/2) res(f, f') / lc(f)."""
    d = f.degree
    if d < 1:
        raise ValueError("discriminant needs degree >= 1")
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    return sign * resultant(f, f.derivative()) / f.lc


def interpolate(points: Sequence[Tuple[Fraction, Fraction]]) -> PolyQ:
    """Lagrange interpolation through distinct rational points."""
    result = PolyQ.zero()
    for i, (xi, yi) in enumerate(points):
        if yi == 0:
            continue
        num = PolyQ.constant(yi)
        denom = Fraction(1)
        for j, (xj, _) in enumerate(points):
            if j != i:
                num = num * PolyQ.from_coeffs([-xj, 1])
                denom *= xi - xj
        result = result + num.scale(1 / denom)
    return result


def cauchy_root_bound(f: PolyQ) -> Fraction:
    """A bound M with every complex root of f inside |z| < M."""
    if f.degree < 1:
        raise ValueError("need degree >= 1")
    return 1 + max(abs(c) for c in f.coeffs) / abs(f.lc)


def _sturm_chain(f: PolyQ) -> list[PolyQ]:
    chain = [f, f.derivative()]
    while not chain[-1].is_zero and chain[-1].degree > 0:
        chain.append(-(chain[-2] % chain[-1]))
    if chain[-1].is_zero:
        chain.pop()
    return chain


def _sign_variations(chain: Sequence[PolyQ], x: Fraction) -> int:
    signs = []
    for p in chain:
        v = p(x)
        if v != 0:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_real_roots(f: PolyQ, lo: Fraction, hi: Fraction) -> int:
    """Number of distinct real roots of squarefree f in the interval (lo, hi]."""
    chain = _sturm_chain(f)
    return _sign_variations(chain, lo) - _sign_variations(chain, hi)


def isolate_real_roots(f: PolyQ) -> list[Tuple[Fraction, Fraction]]:
    """Disjoint isolating intervals for all real roots of squarefree f.

    Returned intervals are sorted ascending.  A rational root appears as a
    degenerate point interval [r, r]; other intervals are (lo, hi) with
    f(lo) and f(hi) nonzero of opposite sign and exactly one root inside.
    """
    if f.degree < 1:
        return []
    if not f.is_squarefree():
        raise ValueError("isolation requires a squarefree polynomial")
    chain = _sturm_chain(f)
    bound = cauchy_root_bound(f)
    out: list[Tuple[Fraction, Fraction]] = []

    def var(x: Fraction) -> int:
        return _sign_variations(chain, x)

    def refine_one(a: Fraction, b: Fraction) -> Tuple[Fraction, Fraction]:
        # Exactly one root in (a, b]; shrink to a sign-change interval or
        # to the root itself when it is rational.
        while True:
            if f(b) == 0:
                return (b, b)
            if f(a) != 0 and f(a) * f(b) < 0:
                return (a, b)
            mid = (a + b) / 2
            if f(mid) == 0:
                return (mid, mid)
            if var(a) - var(mid) == 1:
                b = mid
            else:
                a = mid

    def walk(lo: Fraction, hi: Fraction, vlo: int, vhi: int) -> None:
        count = vlo - vhi
        if count == 0:
            return
        if count == 1:
            out.append(refine_one(lo, hi))
            return
        mid = (lo + hi) / 2
        vmid = var(mid)
        walk(lo, mid, vlo, vmid)
        walk(mid, hi, vmid, vhi)

    walk(-bound, bound, var(-bound), var(bound))
    return sorted(out)


@lru_cache(maxsize=None)
def cyclotomic(k: int) -> PolyQ:
    """The k-th cyclotomic polynomial."""
    if k < 1:
        raise ValueError("k must be positive")
    num = PolyQ.from_coeffs([-1] + [0] * (k - 1) + [1])
    for d in range(1, k):
        if k % d == 0:
            num = num // cyclotomic(d)
    return num
