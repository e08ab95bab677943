"""Local invariants over Q and the odd/symplectic torus correspondence.

Everything here is place-by-place arithmetic: Hilbert symbols drive
quaternion ramification, Witt indices classify quadratic forms over
each completion, and the twins test compares an odd orthogonal group
with a quaternionic unitary group at every relevant place.  Only
finitely many places can carry nontrivial invariants — the infinite
place, 2, and the primes visible in the input coefficients — so global
questions reduce to finite tables.

The torus-level correspondence pairs a palindromic polynomial of even
degree with its odd companion (t - 1) * f: adjoining the fixed line is
exactly how a symplectic torus becomes an odd orthogonal one.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import Iterable, List, Optional, Tuple, Union

from .errors import (
    BadDimension,
    BadPrime,
    NotPalindromic,
    NotSquarefree,
    RootAtOne,
    ValidationError,
)
from .exactnum import PolyQ
from .exactnum.modp import is_prime

RatLike = Union[Fraction, int, str]


@dataclass(frozen=True)
class PlaceQ:
    """A place of Q: the real place (p is None) or a finite prime."""

    p: Optional[int] = None

    def __post_init__(self) -> None:
        if self.p is not None and not is_prime(self.p):
            raise BadPrime(f"{self.p} is not prime")

    @staticmethod
    def infinite() -> "PlaceQ":
        return PlaceQ(None)

    @staticmethod
    def finite(p: int) -> "PlaceQ":
        return PlaceQ(p)

    @property
    def is_infinite(self) -> bool:
        return self.p is None

    def __str__(self) -> str:
        return "oo" if self.p is None else str(self.p)


def _nonzero_fraction(x: RatLike, what: str) -> Fraction:
    q = Fraction(x)
    if q == 0:
        raise ValidationError(f"{what} must be nonzero")
    return q


@dataclass(frozen=True)
class QuadraticFormQ:
    """A regular diagonal quadratic form; entries are the diagonal."""

    diag: Tuple[Fraction, ...]

    def __post_init__(self) -> None:
        entries = tuple(_nonzero_fraction(c, "a diagonal entry") for c in self.diag)
        object.__setattr__(self, "diag", entries)
        if not entries:
            raise ValidationError("a quadratic form needs at least one entry")

    @property
    def dimension(self) -> int:
        return len(self.diag)


@dataclass(frozen=True)
class QuaternionAlgebraQ:
    """The quaternion algebra with i^2 = a, j^2 = b over Q."""

    a: Fraction
    b: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", _nonzero_fraction(self.a, "the symbol entry a"))
        object.__setattr__(self, "b", _nonzero_fraction(self.b, "the symbol entry b"))


# ---------------------------------------------------------------------------
# Hilbert symbols


def _split_unit(x: Fraction, p: int) -> Tuple[int, Fraction]:
    """x = p^alpha * u with u a p-adic unit; returns (alpha, u)."""
    alpha = 0
    num, den = x.numerator, x.denominator
    while num % p == 0:
        num //= p
        alpha += 1
    while den % p == 0:
        den //= p
        alpha -= 1
    return alpha, Fraction(num, den)


def _legendre(u: Fraction, p: int) -> int:
    m = u.numerator * u.denominator % p
    return 1 if pow(m, (p - 1) // 2, p) == 1 else -1


def _unit_mod8(u: Fraction) -> int:
    return u.numerator * pow(u.denominator, -1, 8) % 8


def hilbert_symbol(a: RatLike, b: RatLike, v: PlaceQ) -> int:
    """The norm-residue symbol (a, b)_v: +1 iff z^2 = a x^2 + b y^2 has
    a nontrivial solution over the completion at v."""
    qa = _nonzero_fraction(a, "a")
    qb = _nonzero_fraction(b, "b")
    if v.is_infinite:
        return -1 if qa < 0 and qb < 0 else 1
    p = v.p
    assert p is not None
    alpha, u = _split_unit(qa, p)
    beta, w = _split_unit(qb, p)
    if p == 2:
        eu, ew = _unit_mod8(u), _unit_mod8(w)
        e = (eu % 4 == 3) * (ew % 4 == 3)
        e += alpha * (ew in (3, 5)) + beta * (eu in (3, 5))
        return -1 if e % 2 else 1
    sign = 1
    if alpha % 2 and beta % 2 and p % 4 == 3:
        sign = -sign
    if beta % 2:
        sign *= _legendre(u, p)
    if alpha % 2:
        sign *= _legendre(w, p)
    return sign


def _is_square_local(x: Fraction, v: PlaceQ) -> bool:
    if v.is_infinite:
        return x > 0
    p = v.p
    assert p is not None
    alpha, u = _split_unit(x, p)
    if alpha % 2:
        return False
    if p == 2:
        return _unit_mod8(u) == 1
    return _legendre(u, p) == 1


def _hasse_invariant(diag: Tuple[Fraction, ...], v: PlaceQ) -> int:
    s = 1
    for i in range(len(diag)):
        for j in range(i + 1, len(diag)):
            s *= hilbert_symbol(diag[i], diag[j], v)
    return s


def _isotropic_local(n: int, d: Fraction, s: int, v: PlaceQ) -> bool:
    """Isotropy over Q_p from dimension, discriminant, and Hasse invariant."""
    if n >= 5:
        return True
    if n == 4:
        anisotropic = _is_square_local(d, v) and s == -hilbert_symbol(-1, -1, v)
        return not anisotropic
    if n == 3:
        return s == hilbert_symbol(-1, -d, v)
    if n == 2:
        return _is_square_local(-d, v)
    return False


def witt_index(q: QuadraticFormQ, v: PlaceQ) -> int:
    """Number of hyperbolic planes split off by q over the completion at v.

    At the real place this is the smaller signature count.  At a finite
    prime, hyperbolic planes are peeled one at a time: splitting H off
    negates the discriminant and twists the Hasse invariant by
    (-1, disc)_p, and the standard low-dimensional tables decide when
    peeling stops.
    """
    if v.is_infinite:
        pos = sum(1 for c in q.diag if c > 0)
        return min(pos, q.dimension - pos)
    n = q.dimension
    d = Fraction(prod(q.diag))
    s = _hasse_invariant(q.diag, v)
    index = 0
    while n > 0 and _isotropic_local(n, d, s, v):
        n -= 2
        d = -d
        s *= hilbert_symbol(-1, d, v)
        index += 1
    return index


def quaternion_splits(h: QuaternionAlgebraQ, v: PlaceQ) -> bool:
    """Whether the algebra is matrices (rather than division) at v."""
    return hilbert_symbol(h.a, h.b, v) == 1


# ---------------------------------------------------------------------------
# Relevant places and the twins test


def _prime_factors(n: int) -> List[int]:
    n = abs(n)
    out: List[int] = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out.append(n)
    return out


def relevant_places(values: Iterable[RatLike]) -> Tuple[PlaceQ, ...]:
    """The real place, 2, and every prime visible in the given rationals.

    Hilbert symbols and Hasse invariants built from these values are
    trivial at every other place, so global statements can be checked
    on this finite list.
    """
    primes = {2}
    for x in values:
        q = Fraction(x)
        primes.update(_prime_factors(q.numerator))
        primes.update(_prime_factors(q.denominator))
    return (PlaceQ.infinite(), *(PlaceQ.finite(p) for p in sorted(primes)))


@dataclass(frozen=True)
class PlaceVerdict:
    place: PlaceQ
    b_split: bool
    b_anisotropic: bool
    c_split: bool
    c_anisotropic: bool

    @property
    def agree(self) -> bool:
        return (self.b_split and self.c_split) or (
            self.b_anisotropic and self.c_anisotropic
        )


@dataclass(frozen=True)
class TwinsVerdict:
    twins: bool
    table: Tuple[PlaceVerdict, ...]

    def __bool__(self) -> bool:
        return self.twins


def twins(
    q: QuadraticFormQ,
    h: QuaternionAlgebraQ,
    hermitian_definite_at_infinity: bool,
) -> TwinsVerdict:
    """Place-by-place comparison of SO(q) with the quaternionic unitary group.

    The two groups are twins when at every place both are split or both
    are anisotropic.  The odd orthogonal side of dimension 2n+1 is
    split at v exactly when the Witt index there is n; the quaternionic
    side is split exactly where the algebra is, and can be anisotropic
    only at the real place, where it needs the algebra ramified and the
    hermitian form definite.  Forms of dimension >= 7 are never
    anisotropic at a finite place, so the finite rows reduce to a
    split/split comparison.
    """
    if q.dimension % 2 == 0 or q.dimension < 7:
        raise BadDimension(
            f"the odd orthogonal side needs dimension 2n+1 >= 7, got {q.dimension}"
        )
    n = (q.dimension - 1) // 2
    rows: List[PlaceVerdict] = []
    for v in relevant_places((*q.diag, h.a, h.b)):
        w = witt_index(q, v)
        b_split = w == n
        if v.is_infinite:
            b_aniso = all(c > 0 for c in q.diag) or all(c < 0 for c in q.diag)
        else:
            b_aniso = w == 0
        c_split = quaternion_splits(h, v)
        c_aniso = v.is_infinite and not c_split and hermitian_definite_at_infinity
        rows.append(PlaceVerdict(v, b_split, b_aniso, c_split, c_aniso))
    return TwinsVerdict(all(row.agree for row in rows), tuple(rows))


# ---------------------------------------------------------------------------
# The polynomial torus correspondence


@dataclass(frozen=True)
class PalindromicEtale:
    """A squarefree palindromic polynomial: coordinates of a torus with
    the inversion involution on its eigenvalue algebra."""

    poly: PolyQ

    def __post_init__(self) -> None:
        f = self.poly.monic()
        object.__setattr__(self, "poly", f)
        if not f.is_palindromic():
            raise NotPalindromic(f"{f} is not palindromic")
        if not f.is_squarefree():
            raise NotSquarefree(f"{f} has a repeated factor")

    @property
    def degree(self) -> int:
        return self.poly.degree


def _as_etale(f: Union[PolyQ, PalindromicEtale]) -> PalindromicEtale:
    return f if isinstance(f, PalindromicEtale) else PalindromicEtale(f)


def bc_torus_correspondence(f: Union[PolyQ, PalindromicEtale]) -> PolyQ:
    """(t - 1) * f: the odd-degree companion of an even palindromic input.

    Multiplying by t - 1 adjoins the one-dimensional fixed line, turning
    the degree-2n symplectic torus data into the degree-2n+1 orthogonal
    version.  A root at 1 would make the product non-squarefree, hence
    the RootAtOne gate.
    """
    etale = _as_etale(f)
    if etale.poly(Fraction(1)) == 0:
        raise RootAtOne(f"{etale.poly} vanishes at 1")
    return PolyQ.from_coeffs([-1, 1]) * etale.poly


def fixed_dimension(f: Union[PolyQ, PalindromicEtale]) -> int:
    """Dimension of the inversion-fixed subalgebra of Q[t]/(f).

    Roots pair off under inversion except for fixed points at +-1, so
    the fixed subalgebra has dimension (deg + #fixed roots) / 2.
    Polynomials that are palindromic up to sign are accepted:
    multiplying by t - 1 flips the sign of the symmetry without
    disturbing the involution.  Squarefree palindromic inputs have at
    most one fixed root, giving ceil(deg / 2); anti-palindromic inputs
    of even degree vanish at both 1 and -1, giving deg / 2 + 1.
    """
    if isinstance(f, PalindromicEtale):
        poly = f.poly
    else:
        poly = f.monic()
        if not (poly.is_palindromic() or poly.is_anti_palindromic()):
            raise NotPalindromic(f"{poly} is not palindromic up to sign")
        if not poly.is_squarefree():
            raise NotSquarefree(f"{poly} has a repeated factor")
    fixed = (poly(Fraction(1)) == 0) + (poly(Fraction(-1)) == 0)
    return (poly.degree + fixed) // 2
