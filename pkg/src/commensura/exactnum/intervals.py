"""Rational intervals and certified enclosures of log, arctan, and pi.

All enclosures are computed in integer fixed-point with directed
rounding, so the returned endpoints are honest rational bounds: the true
value always lies inside, and no floating point is consulted anywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple


@dataclass(frozen=True)
class RatInterval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self) -> None:
        if self.lo > self.hi:
            raise ValueError("interval endpoints out of order")

    @staticmethod
    def point(x: Fraction | int) -> "RatInterval":
        x = Fraction(x)
        return RatInterval(x, x)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def contains(self, x: Fraction | int) -> bool:
        return self.lo <= x <= self.hi

    def intersects(self, other: "RatInterval") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def __add__(self, other: "RatInterval") -> "RatInterval":
        return RatInterval(self.lo + other.lo, self.hi + other.hi)

    def __neg__(self) -> "RatInterval":
        return RatInterval(-self.hi, -self.lo)

    def __sub__(self, other: "RatInterval") -> "RatInterval":
        return self + (-other)

    def __mul__(self, other: "RatInterval") -> "RatInterval":
        products = (
            self.lo * other.lo,
            self.lo * other.hi,
            self.hi * other.lo,
            self.hi * other.hi,
        )
        return RatInterval(min(products), max(products))

    def scale(self, c: Fraction | int) -> "RatInterval":
        c = Fraction(c)
        if c >= 0:
            return RatInterval(self.lo * c, self.hi * c)
        return RatInterval(self.hi * c, self.lo * c)

    def square(self) -> "RatInterval":
        if self.lo >= 0:
            return RatInterval(self.lo * self.lo, self.hi * self.hi)
        if self.hi <= 0:
            return RatInterval(self.hi * self.hi, self.lo * self.lo)
        return RatInterval(Fraction(0), max(self.lo * self.lo, self.hi * self.hi))

    def __truediv__(self, other: "RatInterval") -> "RatInterval":
        if other.lo <= 0 <= other.hi:
            raise ZeroDivisionError("division by an interval containing zero")
        quotients = (
            self.lo / other.lo,
            self.lo / other.hi,
            self.hi / other.lo,
            self.hi / other.hi,
        )
        return RatInterval(min(quotients), max(quotients))


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def _atanh_fixed(u: Fraction, w: int) -> Tuple[Fraction, Fraction]:
    """Enclosure of atanh(u) for 0 <= u <= 1/2 at w fixed-point bits."""
    if not 0 <= u <= Fraction(1, 2):
        raise ValueError("argument out of range")
    scale = 1 << w
    u_lo = (u.numerator * scale) // u.denominator
    u_hi = u_lo if u_lo * u.denominator == u.numerator * scale else u_lo + 1
    u2_lo, u2_hi = u_lo * u_lo, u_hi * u_hi
    p_lo, p_hi = u_lo, u_hi
    s_lo, s_hi = 0, 0
    j = 0
    while True:
        d = 2 * j + 1
        s_lo += p_lo // d
        s_hi += _ceil_div(p_hi, d)
        if p_hi <= 4:
            # Remaining true terms sum to at most p_hi / (1 - u^2) ulps.
            s_hi += _ceil_div(4 * p_hi, 3)
            break
        p_lo = (p_lo * u2_lo) >> (2 * w)
        p_hi = _ceil_div(p_hi * u2_hi, 1 << (2 * w))
        j += 1
    return Fraction(s_lo, scale), Fraction(s_hi, scale)


def _atan_series(v: Fraction, w: int) -> Tuple[Fraction, Fraction]:
    """Enclosure of atan(v) for 0 <= v <= 9/20 at w fixed-point bits."""
    if not 0 <= v <= Fraction(9, 20):
        raise ValueError("argument out of range")
    scale = 1 << w
    v_lo = (v.numerator * scale) // v.denominator
    v_hi = v_lo if v_lo * v.denominator == v.numerator * scale else v_lo + 1
    v2_lo, v2_hi = v_lo * v_lo, v_hi * v_hi
    p_lo, p_hi = v_lo, v_hi
    s_lo, s_hi = 0, 0
    j = 0
    while True:
        d = 2 * j + 1
        if j % 2 == 0:
            s_lo += p_lo // d
            s_hi += _ceil_div(p_hi, d)
        else:
            s_lo -= _ceil_div(p_hi, d)
            s_hi -= p_lo // d
        p_lo = (p_lo * v2_lo) >> (2 * w)
        p_hi = _ceil_div(p_hi * v2_hi, 1 << (2 * w))
        j += 1
        if p_hi <= 4:
            # Alternating tail is bounded by the next term's magnitude.
            tail = _ceil_div(p_hi, 2 * j + 1) + 1
            s_lo -= tail
            s_hi += tail
            break
    return Fraction(s_lo, scale), Fraction(s_hi, scale)


def _atan_fixed(v: Fraction, w: int) -> Tuple[Fraction, Fraction]:
    """Enclosure of atan(v) for 0 <= v <= 1; halves the argument once when
    the direct series would converge too slowly."""
    if not 0 <= v <= 1:
        raise ValueError("argument out of range")
    if v <= Fraction(9, 20):
        return _atan_series(v, w)
    # atan(v) = 2 atan(v / (1 + sqrt(1 + v^2))), and the reduced argument
    # is below sqrt(2) - 1 < 9/20 for v <= 1.
    s = sqrt_interval(1 + v * v, w)
    r_lo = v / (1 + s.hi)
    r_hi = v / (1 + s.lo)
    lo, _ = _atan_series(r_lo, w)
    _, hi = _atan_series(r_hi, w)
    return 2 * lo, 2 * hi


_LN2_CACHE: dict[int, RatInterval] = {}
_PI_CACHE: dict[int, RatInterval] = {}


def _ln2(w: int) -> RatInterval:
    if w not in _LN2_CACHE:
        lo, hi = _atanh_fixed(Fraction(1, 3), w)
        _LN2_CACHE[w] = RatInterval(2 * lo, 2 * hi)
    return _LN2_CACHE[w]


def pi_interval(bits: int) -> RatInterval:
    """Enclosure of pi of width at most 2^-bits (Machin's formula)."""
    w = bits + 16
    if w not in _PI_CACHE:
        a_lo, a_hi = _atan_fixed(Fraction(1, 5), w)
        b_lo, b_hi = _atan_fixed(Fraction(1, 239), w)
        _PI_CACHE[w] = RatInterval(16 * a_lo - 4 * b_hi, 16 * a_hi - 4 * b_lo)
    return _PI_CACHE[w]


def log_interval(x: Fraction, bits: int) -> RatInterval:
    """Enclosure of log(x) for rational x > 0, width at most 2^-bits."""
    x = Fraction(x)
    if x <= 0:
        raise ValueError("log needs a positive argument")
    if x == 1:
        return RatInterval.point(0)
    e = x.numerator.bit_length() - x.denominator.bit_length()
    m = x / Fraction(2) ** e
    while m >= 2:
        m /= 2
        e += 1
    while m < 1:
        m *= 2
        e -= 1
    w = bits + 32 + abs(e).bit_length()
    u = (m - 1) / (m + 1)
    lo, hi = _atanh_fixed(u, w)
    ln_m = RatInterval(2 * lo, 2 * hi)
    return ln_m + _ln2(w).scale(e)


def _atan_nonneg(v: Fraction, w: int) -> RatInterval:
    """atan(v) for v >= 0, reducing v > 1 through atan(v) = pi/2 - atan(1/v)."""
    if v <= 1:
        lo, hi = _atan_fixed(v, w)
        return RatInterval(lo, hi)
    lo, hi = _atan_fixed(1 / v, w)
    half_pi = pi_interval(w).scale(Fraction(1, 2))
    return RatInterval(half_pi.lo - hi, half_pi.hi - lo)


def atan2_interval(y: Fraction, x: Fraction, bits: int) -> RatInterval:
    """Enclosure of atan2(y, x) in (-pi, pi] for rational (x, y) != (0, 0)."""
    x, y = Fraction(x), Fraction(y)
    if x == 0 and y == 0:
        raise ValueError("atan2 undefined at the origin")
    w = bits + 16
    if x == 0:
        half_pi = pi_interval(w).scale(Fraction(1, 2))
        return half_pi if y > 0 else -half_pi
    base = _atan_nonneg(abs(y) / abs(x), w)
    if x > 0:
        return base if y >= 0 else -base
    pi_iv = pi_interval(w)
    if y >= 0:
        return RatInterval(pi_iv.lo - base.hi, pi_iv.hi - base.lo)
    return RatInterval(base.lo - pi_iv.hi, base.hi - pi_iv.lo)


def atan2_box(
    x_iv: RatInterval, y_iv: RatInterval, bits: int
) -> Optional[RatInterval]:
    """Range of atan2 over a rectangle, or None when the box straddles the
    branch cut (the closed negative real axis) and must be refined first."""
    if x_iv.contains(0) and y_iv.contains(0):
        return None
    if y_iv.lo < 0 < y_iv.hi and x_iv.lo <= 0:
        return None
    corners = [
        atan2_interval(yc, xc, bits)
        for xc in (x_iv.lo, x_iv.hi)
        for yc in (y_iv.lo, y_iv.hi)
    ]
    return RatInterval(min(c.lo for c in corners), max(c.hi for c in corners))


def sqrt_interval(q: Fraction, bits: int) -> RatInterval:
    """Enclosure of sqrt(q) for rational q >= 0."""
    if q < 0:
        raise ValueError("sqrt of a negative rational")
    if q == 0:
        return RatInterval.point(0)
    shift = 2 * (bits + q.denominator.bit_length())
    n = q.numerator << shift
    root = math.isqrt(n * q.denominator)
    denom = q.denominator << (shift // 2)
    return RatInterval(Fraction(root, denom), Fraction(root + 1, denom))


def nth_root_upper(q: Fraction, k: int, bits: int = 32) -> Fraction:
    """Rational upper bound on q^(1/k) for q >= 0 and integer k >= 1."""
    if q < 0:
        raise ValueError("root of a negative rational")
    if q == 0:
        return Fraction(0)
    if k == 1:
        return q
    shift = k * (bits + q.denominator.bit_length())
    scaled = (q.numerator << shift) // q.denominator + 1
    root = _integer_kth_root(scaled, k) + 1
    return Fraction(root, 1 << (shift // k))


def _integer_kth_root(n: int, k: int) -> int:
    """floor(n^(1/k)) for n >= 0."""
    if n < 2:
        return n
    x = 1 << ((n.bit_length() + k - 1) // k + 1)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            return x
        x = y
