"""Root systems of classical type in their standard coordinate realizations.

Families A, B, C, D are realized explicitly: type A_r lives in the
trace-zero hyperplane of an (r+1)-dimensional ambient space, while
B_n/C_n/D_n use the usual +-e_i +- e_j coordinates in n dimensions.
Weyl group orders and the -1 test also cover the exceptional types.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Tuple

from .errors import DimensionMismatch, NonZeroTrace, UnsupportedFamily

RootVector = Tuple[int, ...]

_EXCEPTIONAL_RANKS = {"E": (6, 7, 8), "F": (4,), "G": (2,)}
_EXCEPTIONAL_WEYL_ORDERS = {
    ("E", 6): 51840,
    ("E", 7): 2903040,
    ("E", 8): 696729600,
    ("F", 4): 1152,
    ("G", 2): 12,
}


@dataclass(frozen=True)
class RootSystemType:
    """An irreducible root-system type, e.g. RootSystemType('B', 3)."""

    family: str
    rank: int

    def __post_init__(self) -> None:
        if self.family not in ("A", "B", "C", "D", "E", "F", "G"):
            raise UnsupportedFamily(f"unknown family {self.family!r}")
        if self.family == "A" and self.rank < 1:
            raise UnsupportedFamily("A requires rank >= 1")
        if self.family in ("B", "C") and self.rank < 2:
            raise UnsupportedFamily(f"{self.family} requires rank >= 2")
        if self.family == "D" and self.rank < 3:
            raise UnsupportedFamily("D requires rank >= 3")
        if self.family in _EXCEPTIONAL_RANKS and self.rank not in _EXCEPTIONAL_RANKS[self.family]:
            raise UnsupportedFamily(f"{self.family} has no rank {self.rank}")

    @property
    def ambient_dimension(self) -> int:
        """Dimension of the coordinate space the standard realization uses."""
        if self.family == "A":
            return self.rank + 1
        if self.family in ("B", "C", "D"):
            return self.rank
        raise UnsupportedFamily(f"no coordinate realization for {self.family}{self.rank}")

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


@dataclass(frozen=True)
class WeylClassDescriptor:
    """Conjugacy class of a classical Weyl group as a (signed) cycle type.

    ``positive`` and ``negative`` are descending partitions; for type A the
    negative part is empty and ``positive`` is an ordinary cycle type.
    """

    positive: Tuple[int, ...]
    negative: Tuple[int, ...]

    def __post_init__(self) -> None:
        for part in (self.positive, self.negative):
            if any(p <= 0 for p in part) or list(part) != sorted(part, reverse=True):
                raise ValueError("parts must be positive and descending")

    @property
    def degree(self) -> int:
        return sum(self.positive) + sum(self.negative)

    @property
    def is_identity(self) -> bool:
        return not self.negative and all(p == 1 for p in self.positive)

    def __str__(self) -> str:
        pos = ",".join(str(p) for p in self.positive)
        neg = ",".join(f"-{p}" for p in self.negative)
        return "[" + ";".join(s for s in (pos, neg) if s) + "]"


def _require_coordinate_family(rst: RootSystemType) -> None:
    if rst.family not in ("A", "B", "C", "D"):
        raise UnsupportedFamily(f"operation needs a classical type, got {rst}")


def roots(rst: RootSystemType) -> Tuple[RootVector, ...]:
    """All roots of the given type in standard coordinates, lex-sorted."""
    _require_coordinate_family(rst)
    n = rst.rank
    out: list[RootVector] = []
    if rst.family == "A":
        dim = n + 1
        for i in range(dim):
            for j in range(dim):
                if i != j:
                    v = [0] * dim
                    v[i], v[j] = 1, -1
                    out.append(tuple(v))
    else:
        for i in range(n):
            for j in range(i + 1, n):
                for si in (1, -1):
                    for sj in (1, -1):
                        v = [0] * n
                        v[i], v[j] = si, sj
                        out.append(tuple(v))
        if rst.family == "B":
            for i in range(n):
                for s in (1, -1):
                    v = [0] * n
                    v[i] = s
                    out.append(tuple(v))
        elif rst.family == "C":
            for i in range(n):
                for s in (1, -1):
                    v = [0] * n
                    v[i] = 2 * s
                    out.append(tuple(v))
    return tuple(sorted(out))


def weyl_order(rst: RootSystemType) -> int:
    """Order of the Weyl group W."""
    n = rst.rank
    if rst.family == "A":
        return math.factorial(n + 1)
    if rst.family in ("B", "C"):
        return (2**n) * math.factorial(n)
    if rst.family == "D":
        return (2 ** (n - 1)) * math.factorial(n)
    return _EXCEPTIONAL_WEYL_ORDERS[(rst.family, n)]


def minus_one_in_weyl(rst: RootSystemType) -> bool:
    """Whether -1 (negation of the ambient space) lies in W.

    False exactly for A_n with n >= 2, D_n with n odd, and E6; note that
    D_3 agrees with A_3 under the classical coincidence of those types.
    """
    n = rst.rank
    if rst.family == "A":
        return n == 1
    if rst.family == "D":
        return n % 2 == 0
    if (rst.family, n) == ("E", 6):
        return False
    return True


def _partitions(n: int) -> Iterable[Tuple[int, ...]]:
    """Descending partitions of n (the empty partition for n = 0)."""
    if n == 0:
        yield ()
        return

    def rec(remaining: int, cap: int) -> Iterable[Tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, cap), 0, -1):
            for rest in rec(remaining - first, first):
                yield (first,) + rest

    yield from rec(n, n)


def conjugacy_classes(rst: RootSystemType) -> Tuple[WeylClassDescriptor, ...]:
    """Conjugacy classes of W as (signed) cycle types, in a fixed order.

    Type A_r: partitions of r+1.  Types B_n/C_n: pairs of partitions with
    total n.  Type D_n: pairs with an even number of negative parts; the
    two classes sharing a very even cycle type are collapsed into one
    descriptor, so the count can be below the true class number.
    """
    _require_coordinate_family(rst)
    n = rst.rank
    out: list[WeylClassDescriptor] = []
    if rst.family == "A":
        for pos in _partitions(n + 1):
            out.append(WeylClassDescriptor(pos, ()))
    else:
        for k in range(n + 1):
            for pos in _partitions(n - k):
                for neg in _partitions(k):
                    if rst.family == "D" and len(neg) % 2 != 0:
                        continue
                    out.append(WeylClassDescriptor(pos, neg))
    return tuple(sorted(out, key=lambda d: (d.positive, d.negative)))


def quadratic_sum(rst: RootSystemType, x: Sequence[Fraction | int]) -> Fraction:
    """Sum over all roots alpha of <alpha, x>^2, exactly.

    For family A the input must lie in the trace-zero hyperplane.
    """
    _require_coordinate_family(rst)
    if len(x) != rst.ambient_dimension:
        raise DimensionMismatch(
            f"{rst} expects vectors of length {rst.ambient_dimension}, got {len(x)}"
        )
    vec = [Fraction(c) for c in x]
    if rst.family == "A" and sum(vec) != 0:
        raise NonZeroTrace("family A vectors must have zero coordinate sum")
    total = Fraction(0)
    for alpha in roots(rst):
        pairing = sum((a * c for a, c in zip(alpha, vec)), Fraction(0))
        total += pairing * pairing
    return total


def casimir_constant(rst: RootSystemType) -> int:
    """The constant c with quadratic_sum(rst, x) = c * |x|^2.

    Values: A_r -> 2(r+1), B_n -> 4n-2, C_n -> 4n+4, D_n -> 4(n-1).
    """
    _require_coordinate_family(rst)
    n = rst.rank
    if rst.family == "A":
        return 2 * (n + 1)
    if rst.family == "B":
        return 4 * n - 2
    if rst.family == "C":
        return 4 * n + 4
    return 4 * (n - 1)


def gram_matrix(rst: RootSystemType) -> Tuple[Tuple[int, ...], ...]:
    """Matrix Q = sum_alpha alpha alpha^T, so x^T Q x = quadratic_sum(rst, x)."""
    _require_coordinate_family(rst)
    dim = rst.ambient_dimension
    q = [[0] * dim for _ in range(dim)]
    for alpha in roots(rst):
        for i, j in itertools.product(range(dim), repeat=2):
            q[i][j] += alpha[i] * alpha[j]
    return tuple(tuple(row) for row in q)
