"""Algebraic numbers as (minimal polynomial, isolating box) pairs.

A value is represented exactly by its monic irreducible polynomial over
Q together with a rational rectangle in the complex plane containing
exactly one of its roots.  Real roots are isolated by Sturm bisection;
non-real roots are certified through Smale's alpha test, evaluated in
exact rational arithmetic, so floating point only ever supplies hints.
Products and powers go through resultants and are therefore exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple

from ..errors import DegreeTooLarge, PrecisionExhausted, ZeroBase
from .factorq import factor_over_q
from .intervals import (
    RatInterval,
    atan2_box,
    log_interval,
    pi_interval,
    sqrt_interval,
    nth_root_upper,
)
from .polyq import PolyQ, cyclotomic, interpolate, isolate_real_roots, resultant

MINPOLY_DEGREE_CAP = 12
_RESULTANT_DEGREE_CAP = 24
_ALPHA_THRESHOLD = Fraction(1, 32)


@dataclass(frozen=True)
class ComplexBox:
    re: RatInterval
    im: RatInterval

    @staticmethod
    def point(x: Fraction, y: Fraction = Fraction(0)) -> "ComplexBox":
        return ComplexBox(RatInterval.point(x), RatInterval.point(y))

    @property
    def is_real_line(self) -> bool:
        return self.im.lo == 0 == self.im.hi

    @property
    def width(self) -> Fraction:
        return max(self.re.width, self.im.width)

    def center(self) -> Tuple[Fraction, Fraction]:
        return ((self.re.lo + self.re.hi) / 2, (self.im.lo + self.im.hi) / 2)

    def contains_zero(self) -> bool:
        return self.re.contains(0) and self.im.contains(0)

    def intersects(self, other: "ComplexBox") -> bool:
        return self.re.intersects(other.re) and self.im.intersects(other.im)

    def __add__(self, other: "ComplexBox") -> "ComplexBox":
        return ComplexBox(self.re + other.re, self.im + other.im)

    def __mul__(self, other: "ComplexBox") -> "ComplexBox":
        return ComplexBox(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def conjugate(self) -> "ComplexBox":
        return ComplexBox(self.re, -self.im)

    def reciprocal(self) -> "ComplexBox":
        denom = self.re.square() + self.im.square()
        if denom.lo <= 0:
            raise ZeroDivisionError("box too close to zero to invert")
        return ComplexBox(self.re / denom, (-self.im) / denom)

    def abs_square(self) -> RatInterval:
        return self.re.square() + self.im.square()


# ---------------------------------------------------------------------------
# Exact complex-rational evaluation and the alpha certificate


def _eval_complex(f: PolyQ, x: Fraction, y: Fraction) -> Tuple[Fraction, Fraction]:
    """f(x + iy) by Horner in exact rational arithmetic."""
    re, im = Fraction(0), Fraction(0)
    for c in reversed(f.coeffs):
        re, im = re * x - im * y + c, re * y + im * x
    return re, im


def _taylor_coefficients(f: PolyQ) -> list[PolyQ]:
    """g_k = f^(k) / k! for k = 0..deg f."""
    out = [f]
    while out[-1].degree > 0:
        out.append(out[-1].derivative())
    fact = 1
    for k in range(len(out)):
        if k > 1:
            fact *= k
        out[k] = out[k].scale(Fraction(1, fact))
    return out


def _alpha_certificate(
    taylor: Sequence[PolyQ], z: Tuple[Fraction, Fraction]
) -> Optional[Fraction]:
    """If Smale's alpha test passes at z, return an upper bound on
    beta = |f(z)/f'(z)|; otherwise None."""
    x, y = z
    f_re, f_im = _eval_complex(taylor[0], x, y)
    d_re, d_im = _eval_complex(taylor[1], x, y)
    d_sq = d_re * d_re + d_im * d_im
    if d_sq == 0:
        return None
    f_sq = f_re * f_re + f_im * f_im
    beta_sq = f_sq / d_sq
    beta_up = sqrt_interval(beta_sq, 64).hi
    gamma_up = Fraction(0)
    for k in range(2, len(taylor)):
        t_re, t_im = _eval_complex(taylor[k], x, y)
        r_sq = (t_re * t_re + t_im * t_im) / d_sq
        if r_sq == 0:
            continue
        r_up = sqrt_interval(r_sq, 48).hi
        bound = nth_root_upper(r_up, k - 1, 48)
        gamma_up = max(gamma_up, bound)
    if beta_up * gamma_up <= _ALPHA_THRESHOLD:
        return beta_up
    return None


# ---------------------------------------------------------------------------
# Floating-point root hints (soundness never depends on them)


def _durand_kerner(coeffs: Sequence[float], iterations: int) -> list[complex]:
    n = len(coeffs) - 1
    lead = coeffs[-1]
    monic = [c / lead for c in coeffs]
    radius = 1.0 + max(abs(c) for c in monic[:-1]) if n > 0 else 1.0
    z = [(0.4 + 0.9j) ** k * radius for k in range(1, n + 1)]
    for _ in range(iterations):
        moved = 0.0
        for i in range(n):
            p = 0.0 + 0.0j
            for c in reversed(monic):
                p = p * z[i] + c
            q = 1.0 + 0.0j
            for j in range(n):
                if j != i:
                    q *= z[i] - z[j]
            if q == 0:
                continue
            step = p / q
            z[i] -= step
            moved = max(moved, abs(step))
        if moved < 1e-14:
            break
    return z


def _to_dyadic(v: float, bits: int = 80) -> Fraction:
    return Fraction(v).limit_denominator(1 << bits)


# ---------------------------------------------------------------------------
# Certified isolation of all roots of a squarefree polynomial

_ISOLATION_CACHE: dict[Tuple[Fraction, ...], Tuple[ComplexBox, ...]] = {}


def _newton_step(
    taylor: Sequence[PolyQ], x: Fraction, y: Fraction, round_bits: int
) -> Tuple[Fraction, Fraction]:
    f_re, f_im = _eval_complex(taylor[0], x, y)
    d_re, d_im = _eval_complex(taylor[1], x, y)
    d_sq = d_re * d_re + d_im * d_im
    if d_sq == 0:
        return x, y
    nx = x - (f_re * d_re + f_im * d_im) / d_sq
    ny = y - (f_im * d_re - f_re * d_im) / d_sq
    scale = 1 << round_bits
    return (
        Fraction(round(nx * scale), scale),
        Fraction(round(ny * scale), scale),
    )


def isolate_roots(f: PolyQ) -> Tuple[ComplexBox, ...]:
    """Certified isolating boxes for every root of a squarefree polynomial.

    Real roots come first (ascending), then upper-half-plane roots sorted
    by certified center, then their conjugates; the order and the boxes
    themselves are deterministic.
    """
    key = f.monic().coeffs
    if key in _ISOLATION_CACHE:
        return _ISOLATION_CACHE[key]
    g = f.monic()
    n = g.degree
    if n < 1:
        return ()
    real_boxes = [
        refine_box(g, ComplexBox(RatInterval(lo, hi), RatInterval.point(0)), 16)
        for lo, hi in isolate_real_roots(g)
    ]
    pairs_needed = (n - len(real_boxes)) // 2
    if len(real_boxes) + 2 * pairs_needed != n:
        raise ArithmeticError("parity mismatch in root counting")
    upper: list[ComplexBox] = []
    if pairs_needed:
        taylor = _taylor_coefficients(g)
        float_coeffs = [float(c) for c in g.coeffs]
        for attempt in range(6):
            iterations = 400 * (attempt + 1)
            round_bits = 96 + 64 * attempt
            seeds = [
                z for z in _durand_kerner(float_coeffs, iterations) if z.imag > 1e-12
            ]
            if len(seeds) != pairs_needed:
                continue
            seeds.sort(key=lambda z: (z.real, z.imag))
            upper = []
            ok = True
            for seed in seeds:
                x, y = _to_dyadic(seed.real), _to_dyadic(seed.imag)
                beta = None
                for _ in range(12):
                    beta = _alpha_certificate(taylor, (x, y))
                    if beta is not None:
                        break
                    x, y = _newton_step(taylor, x, y, round_bits)
                if beta is None:
                    ok = False
                    break
                h = max(2 * beta, Fraction(1, 1 << round_bits))
                box = ComplexBox(
                    RatInterval(x - h, x + h), RatInterval(y - h, y + h)
                )
                if box.im.lo <= 0:
                    ok = False
                    break
                upper.append(box)
            if not ok or len(upper) != pairs_needed:
                continue
            disjoint = all(
                not upper[i].intersects(upper[j])
                for i in range(len(upper))
                for j in range(i + 1, len(upper))
            )
            if disjoint:
                break
        else:
            raise PrecisionExhausted(f"could not certify complex roots of {g}")
    upper.sort(key=lambda b: (b.re.lo, b.im.lo))
    boxes = tuple(real_boxes + upper + [b.conjugate() for b in upper])
    _ISOLATION_CACHE[key] = boxes
    return boxes


_SEPARATION_CACHE: dict[Tuple[Fraction, ...], Fraction] = {}


def root_separation_bound(f: PolyQ) -> Fraction:
    """Positive rational lower bound on the distance between distinct
    roots of a squarefree polynomial (Mahler's inequality)."""
    key = f.monic().coeffs
    if key in _SEPARATION_CACHE:
        return _SEPARATION_CACHE[key]
    d = f.degree
    if d < 2:
        return Fraction(1)
    _, ints = f.integer_form()
    disc_scaled = abs(
        resultant(PolyQ.from_coeffs(ints), PolyQ.from_coeffs(ints).derivative())
    )
    if disc_scaled == 0:
        raise ValueError("separation bound needs a squarefree polynomial")
    norm_sq = sum(c * c for c in ints)
    num = sqrt_interval(3 * disc_scaled / Fraction(abs(ints[-1])), 32).lo
    den_a = sqrt_interval(Fraction(d) ** (d + 2), 32).hi
    den_b = sqrt_interval(Fraction(norm_sq) ** (d - 1), 32).hi
    bound = num / (den_a * den_b)
    if bound <= 0:
        bound = Fraction(1, 2**64)
    _SEPARATION_CACHE[key] = bound
    return bound


def refine_box(f: PolyQ, box: ComplexBox, bits: int) -> ComplexBox:
    """Shrink an isolating box of a root of f to width at most 2^-bits.

    Real boxes shrink by sign bisection; complex boxes by exact Newton
    steps recertified with the alpha test.
    """
    target = Fraction(1, 1 << bits)
    if box.width <= target:
        return box
    if box.is_real_line:
        lo, hi = box.re.lo, box.re.hi
        if lo == hi:
            return box
        s_lo = f(lo)
        if s_lo == 0:
            return ComplexBox(RatInterval.point(lo), RatInterval.point(0))
        while hi - lo > target:
            mid = (lo + hi) / 2
            v = f(mid)
            if v == 0:
                return ComplexBox(RatInterval.point(mid), RatInterval.point(0))
            if (s_lo < 0) != (v < 0):
                hi = mid
            else:
                lo, s_lo = mid, v
        return ComplexBox(RatInterval(lo, hi), RatInterval.point(0))
    taylor = _taylor_coefficients(f.monic())
    x, y = box.center()
    round_bits = max(2 * bits + 32, 96)
    current = box
    for _ in range(64):
        beta = _alpha_certificate(taylor, (x, y))
        if beta is not None:
            h = 2 * beta
            candidate = ComplexBox(RatInterval(x - h, x + h), RatInterval(y - h, y + h))
            if candidate.intersects(current):
                clipped = ComplexBox(
                    RatInterval(
                        max(candidate.re.lo, current.re.lo),
                        min(candidate.re.hi, current.re.hi),
                    ),
                    RatInterval(
                        max(candidate.im.lo, current.im.lo),
                        min(candidate.im.hi, current.im.hi),
                    ),
                )
                current = clipped
                if current.width <= target:
                    return current
        x, y = _newton_step(taylor, x, y, round_bits)
        round_bits += 32
    raise PrecisionExhausted(f"box refinement stalled for {f}")


# ---------------------------------------------------------------------------
# The public value type


@dataclass(frozen=True)
class AlgebraicNumber:
    """An exact algebraic number: monic irreducible minpoly plus a box
    isolating the intended root from its conjugates."""

    minpoly: PolyQ
    box: ComplexBox

    def __post_init__(self) -> None:
        if self.minpoly.degree < 1:
            raise ValueError("minimal polynomial must be nonconstant")
        if self.minpoly.degree > MINPOLY_DEGREE_CAP:
            raise DegreeTooLarge(
                f"minimal polynomial degree {self.minpoly.degree} exceeds {MINPOLY_DEGREE_CAP}"
            )

    @staticmethod
    def from_rational(q: Fraction | int) -> "AlgebraicNumber":
        q = Fraction(q)
        return AlgebraicNumber(
            PolyQ.from_coeffs([-q, 1]), ComplexBox.point(q)
        )

    @property
    def degree(self) -> int:
        return self.minpoly.degree

    @property
    def is_rational(self) -> bool:
        return self.degree == 1

    def as_rational(self) -> Fraction:
        if not self.is_rational:
            raise ValueError("not a rational number")
        return -self.minpoly.coeffs[0]

    @property
    def is_zero(self) -> bool:
        return self.is_rational and self.as_rational() == 0

    @property
    def is_real(self) -> bool:
        return self.box.is_real_line

    def refined(self, bits: int) -> "AlgebraicNumber":
        return AlgebraicNumber(self.minpoly, refine_box(self.minpoly, self.box, bits))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AlgebraicNumber):
            return NotImplemented
        if self.minpoly != other.minpoly:
            return False
        if self.is_rational:
            return True
        if self.is_real != other.is_real:
            return False
        sep = root_separation_bound(self.minpoly)
        q = Fraction(8) / sep
        bits = max(8, (q.numerator // q.denominator).bit_length() + 2)
        a = refine_box(self.minpoly, self.box, bits)
        b = refine_box(other.minpoly, other.box, bits)
        return a.intersects(b)

    def __hash__(self) -> int:
        return hash(self.minpoly.coeffs)

    # -- certified analytic data ------------------------------------------

    def abs_square_interval(self, bits: int) -> RatInterval:
        box = refine_box(self.minpoly, self.box, bits)
        return box.abs_square()

    def abs_log_interval(self, bits: int) -> RatInterval:
        """Enclosure of log|value| of width at most 2^-bits."""
        if self.is_rational:
            q = abs(self.as_rational())
            if q == 0:
                raise ZeroBase("log of zero")
            return log_interval(q, bits)
        if self.root_of_unity_order() is not None:
            return RatInterval.point(0)
        work = bits + 8
        for _ in range(24):
            sq = self.abs_square_interval(work)
            if sq.lo > 0 and (sq.hi - sq.lo) / sq.lo <= Fraction(1, 1 << (bits + 3)):
                lo_iv = log_interval(sq.lo, bits + 4)
                hi_iv = log_interval(sq.hi, bits + 4)
                return RatInterval(lo_iv.lo / 2, hi_iv.hi / 2)
            work *= 2
            if work > 1 << 16:
                break
        raise PrecisionExhausted("log enclosure did not converge")

    def turn_interval(self, bits: int) -> RatInterval:
        """Enclosure of Arg(value) / 2pi, taken in (-1/2, 1/2]."""
        order = self.root_of_unity_order()
        if order is not None:
            return RatInterval.point(self.exact_turn())
        if self.is_real:
            box = self.box
            for _ in range(64):
                if not box.re.contains(0):
                    break
                box = refine_box(self.minpoly, box, max(bits, 16))
                bits += 8
            return RatInterval.point(0 if box.re.lo > 0 else Fraction(1, 2))
        work = bits + 4
        for _ in range(24):
            box = refine_box(self.minpoly, self.box, work)
            theta = atan2_box(box.re, box.im, work + 8)
            if theta is not None:
                turn = theta / pi_interval(work + 8).scale(2)
                if turn.width <= Fraction(1, 1 << bits):
                    return turn
            work *= 2
            if work > 1 << 16:
                break
        raise PrecisionExhausted("argument enclosure did not converge")

    def root_of_unity_order(self) -> Optional[int]:
        """The exact multiplicative order if the value is a root of unity."""
        return _cyclotomic_order(self.minpoly)

    def exact_turn(self) -> Fraction:
        """For a root of unity of order k, the exact argument j/k of a turn."""
        k = self.root_of_unity_order()
        if k is None:
            raise ValueError("not a root of unity")
        if k == 1:
            return Fraction(0)
        if k == 2:
            return Fraction(1, 2)
        bits = 2 * k.bit_length() + 8
        box = refine_box(self.minpoly, self.box, bits)
        theta = None
        work = bits
        while theta is None:
            theta = atan2_box(box.re, box.im, work)
            if theta is None:
                work += 16
                box = refine_box(self.minpoly, box, work)
        turn = theta / pi_interval(work).scale(2)
        residues = [
            j
            for j in range(-((k - 1) // 2), k // 2 + 1)
            if math.gcd(j, k) == 1
        ]
        candidates = [Fraction(j, k) for j in residues if turn.contains(Fraction(j, k))]
        while len(candidates) != 1:
            work *= 2
            if work > 1 << 14:
                raise PrecisionExhausted("could not pin down the root-of-unity angle")
            box = refine_box(self.minpoly, box, work)
            theta = atan2_box(box.re, box.im, work)
            if theta is None:
                continue
            turn = theta / pi_interval(work).scale(2)
            candidates = [
                Fraction(j, k) for j in residues if turn.contains(Fraction(j, k))
            ]
        return candidates[0]


_CYCLOTOMIC_ORDERS: dict[Tuple[Fraction, ...], Optional[int]] = {}


def _totient(k: int) -> int:
    result = k
    m = k
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _cyclotomic_order(f: PolyQ) -> Optional[int]:
    key = f.coeffs
    if key in _CYCLOTOMIC_ORDERS:
        return _CYCLOTOMIC_ORDERS[key]
    d = f.degree
    result = None
    if f.is_monic and all(c.denominator == 1 for c in f.coeffs):
        limit = max(6, 2 * d * d + 1)
        for k in range(1, limit + 1):
            if _totient(k) == d and cyclotomic(k) == f:
                result = k
                break
    _CYCLOTOMIC_ORDERS[key] = result
    return result


def roots_of(f: PolyQ) -> list[AlgebraicNumber]:
    """Distinct roots of f as algebraic numbers, in a deterministic order:
    factors sorted canonically, real roots ascending, then conjugate pairs."""
    if f.degree < 1:
        return []
    _, factors = factor_over_q(f)
    out: list[AlgebraicNumber] = []
    for factor, _mult in factors:
        for box in isolate_roots(factor):
            out.append(AlgebraicNumber(factor, box))
    return out


def equals_one(a: AlgebraicNumber) -> bool:
    return a.is_rational and a.as_rational() == 1


def is_root_of_unity(a: AlgebraicNumber) -> Optional[int]:
    return a.root_of_unity_order()


def certified_log(a: AlgebraicNumber, bits: int) -> RatInterval:
    """Certified enclosure of log|a| with rational endpoints."""
    return a.abs_log_interval(bits)


# ---------------------------------------------------------------------------
# Products and powers


def matrix_charpoly(matrix: list[list[Fraction]]) -> PolyQ:
    """Characteristic polynomial det(tI - M) by Faddeev-LeVerrier."""
    n = len(matrix)
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    m = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        # M_k = A (M_{k-1} + c_{n-k+1} I)
        work = [row[:] for row in m]
        if k > 1:
            for i in range(n):
                work[i][i] += coeffs[n - k + 1]
        new = [[Fraction(0)] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                if k == 1:
                    new[i][j] = matrix[i][j]
                else:
                    new[i][j] = sum(
                        (matrix[i][l] * work[l][j] for l in range(n)), Fraction(0)
                    )
        trace = sum((new[i][i] for i in range(n)), Fraction(0))
        coeffs[n - k] = -trace / k
        m = new
    return PolyQ.from_coeffs(coeffs)


def _poly_powmod_q(base: PolyQ, e: int, mod: PolyQ) -> PolyQ:
    result = PolyQ.one()
    acc = base % mod
    while e:
        if e & 1:
            result = (result * acc) % mod
        e >>= 1
        if e:
            acc = (acc * acc) % mod
    return result


def _inverse_of_x_mod(f: PolyQ) -> PolyQ:
    """h with x*h = 1 mod f; needs f(0) != 0."""
    f0 = f.coeffs[0]
    if f0 == 0:
        raise ZeroBase("inverting a root of the polynomial t")
    shifted = PolyQ.from_coeffs([-c / f0 for c in f.coeffs[1:]])
    return shifted


def _box_power(box: ComplexBox, e: int) -> ComplexBox:
    result = ComplexBox.point(Fraction(1))
    acc = box
    k = abs(e)
    while k:
        if k & 1:
            result = result * acc
        k >>= 1
        if k:
            acc = acc * acc
    if e < 0:
        return result.reciprocal()
    return result


def _select_root(
    candidate: PolyQ, value_box: "_RefinableBox"
) -> AlgebraicNumber:
    """Pick the unique root of candidate lying in the refinable value box."""
    squarefree = candidate.squarefree_part()
    _, factors = factor_over_q(squarefree)
    roots: list[Tuple[PolyQ, ComplexBox]] = []
    for factor, _m in factors:
        for box in isolate_roots(factor):
            roots.append((factor, box))
    box = value_box.current()
    for _ in range(64):
        hits = [(g, b) for g, b in roots if b.intersects(box)]
        if len(hits) == 1:
            g, b = hits[0]
            if g.degree > MINPOLY_DEGREE_CAP:
                raise DegreeTooLarge(
                    f"product of algebraic numbers has degree {g.degree}"
                )
            return AlgebraicNumber(g, b)
        if not hits:
            raise ArithmeticError("value box lost every candidate root")
        bits = max(16, (1 / box.width).numerator.bit_length() + 16) if box.width else 64
        roots = [(g, refine_box(g, b, bits)) for g, b in hits]
        box = value_box.refine()
    raise PrecisionExhausted("root selection did not converge")


class _RefinableBox:
    """A complex box for a product of powers, refinable on demand."""

    def __init__(self, parts: Sequence[Tuple[AlgebraicNumber, int]]):
        self.parts = list(parts)
        self.bits = 96

    def _compute(self) -> ComplexBox:
        out = ComplexBox.point(Fraction(1))
        for a, e in self.parts:
            box = refine_box(a.minpoly, a.box, self.bits)
            if e < 0:
                while box.abs_square().lo <= 0:
                    self.bits += 32
                    box = refine_box(a.minpoly, a.box, self.bits)
            out = out * _box_power(box, e)
        return out

    def current(self) -> ComplexBox:
        return self._compute()

    def refine(self) -> ComplexBox:
        self.bits *= 2
        if self.bits > 1 << 15:
            raise PrecisionExhausted("product box refinement exceeded the cap")
        return self._compute()


class _RefinableSumBox:
    """A complex box for a sum of two values, refinable on demand."""

    def __init__(self, a: AlgebraicNumber, b: AlgebraicNumber):
        self.a = a
        self.b = b
        self.bits = 96

    def _compute(self) -> ComplexBox:
        return refine_box(self.a.minpoly, self.a.box, self.bits) + refine_box(
            self.b.minpoly, self.b.box, self.bits
        )

    def current(self) -> ComplexBox:
        return self._compute()

    def refine(self) -> ComplexBox:
        self.bits *= 2
        if self.bits > 1 << 15:
            raise PrecisionExhausted("sum box refinement exceeded the cap")
        return self._compute()


def _power(a: AlgebraicNumber, e: int) -> AlgebraicNumber:
    if a.is_zero:
        if e < 0:
            raise ZeroBase("zero cannot be raised to a negative power")
        return AlgebraicNumber.from_rational(0 if e else 1)
    if e == 0:
        return AlgebraicNumber.from_rational(1)
    if e == 1:
        return a
    if a.is_rational:
        return AlgebraicNumber.from_rational(a.as_rational() ** e)
    f = a.minpoly
    if e > 0:
        g = _poly_powmod_q(PolyQ.x(), e, f)
    else:
        g = _poly_powmod_q(_inverse_of_x_mod(f), -e, f)
    n = f.degree
    columns = []
    for j in range(n):
        col = (g * _poly_powmod_q(PolyQ.x(), j, f)) % f
        coeffs = list(col.coeffs) + [Fraction(0)] * (n - len(col.coeffs))
        columns.append(coeffs)
    matrix = [[columns[j][i] for j in range(n)] for i in range(n)]
    candidate = matrix_charpoly(matrix)
    return _select_root(candidate, _RefinableBox([(a, e)]))


def _multiply(a: AlgebraicNumber, b: AlgebraicNumber) -> AlgebraicNumber:
    if a.is_rational:
        a, b = b, a
    if b.is_rational:
        q = b.as_rational()
        if q == 0:
            return AlgebraicNumber.from_rational(0)
        if a.is_rational:
            return AlgebraicNumber.from_rational(a.as_rational() * q)
        # Scale the minpoly: roots of f(t/q) are q * (roots of f).
        f = a.minpoly
        scaled = PolyQ.from_coeffs(
            [c / q**i for i, c in enumerate(f.coeffs)]
        ).monic()
        box = a.box * ComplexBox.point(q)
        return AlgebraicNumber(scaled, box)
    n, m = a.minpoly.degree, b.minpoly.degree
    if n * m > _RESULTANT_DEGREE_CAP:
        raise DegreeTooLarge(f"product resultant degree {n * m} is too large")
    # R(t) = Res_x(f(x), x^m g(t/x)) vanishes exactly at products of roots.
    f, g = a.minpoly, b.minpoly
    samples: list[Tuple[Fraction, Fraction]] = []
    t = Fraction(0)
    while len(samples) < n * m + 1:
        g_t = PolyQ.from_coeffs(
            [g.coeffs[m - i] * t ** (m - i) for i in range(m + 1)]
        )
        if g_t.degree == m:
            samples.append((t, resultant(f, g_t)))
        t += 1
    candidate = interpolate(samples)
    return _select_root(candidate, _RefinableBox([(a, 1), (b, 1)]))


def algebraic_product(
    factors: Sequence[Tuple[AlgebraicNumber, int]]
) -> AlgebraicNumber:
    """Exact product of powers of algebraic numbers.

    Zero base with a negative exponent raises ZeroBase; the result's
    minimal polynomial is subject to the same degree cap as any other
    constructed value.
    """
    result = AlgebraicNumber.from_rational(1)
    for a, e in factors:
        if a.is_zero and e < 0:
            raise ZeroBase("zero cannot be raised to a negative power")
        result = _multiply(result, _power(a, e))
    return result


def _compose_linear(g: PolyQ, a: Fraction, b: Fraction) -> PolyQ:
    """g(a + b*x) as a polynomial in x."""
    lin = PolyQ.from_coeffs([a, b])
    out = PolyQ.from_coeffs([])
    for c in reversed(g.coeffs):
        out = out * lin + PolyQ.from_coeffs([c])
    return out


def algebraic_sum(a: AlgebraicNumber, b: AlgebraicNumber) -> AlgebraicNumber:
    """Exact sum of two algebraic numbers.

    Mirrors the product construction: the defining polynomial is the
    resultant Res_x(f(x), g(t - x)), recovered by interpolation, and the
    right root is the one the interval sum of the two boxes pins down.
    """
    if a.is_rational:
        a, b = b, a
    if b.is_rational:
        q = b.as_rational()
        if a.is_rational:
            return AlgebraicNumber.from_rational(a.as_rational() + q)
        if q == 0:
            return a
        # Roots of f(t - q) are q + (roots of f).
        shifted = _compose_linear(a.minpoly, -q, Fraction(1))
        box = a.box + ComplexBox.point(q)
        return AlgebraicNumber(shifted.monic(), box)
    n, m = a.minpoly.degree, b.minpoly.degree
    if n * m > _RESULTANT_DEGREE_CAP:
        raise DegreeTooLarge(f"sum resultant degree {n * m} is too large")
    f, g = a.minpoly, b.minpoly
    samples: list[Tuple[Fraction, Fraction]] = []
    t = Fraction(0)
    while len(samples) < n * m + 1:
        g_t = _compose_linear(g, t, Fraction(-1))
        samples.append((t, resultant(f, g_t)))
        t += 1
    candidate = interpolate(samples)
    return _select_root(candidate, _RefinableSumBox(a, b))
