"""Exact integer/rational lattice routines.

Everything here runs over Fraction, so reduction and enumeration are
free of rounding: LLL with the classical delta = 3/4, Fincke-Pohst
enumeration of all vectors inside a given radius, and a row-style
Hermite normal form used to put relation bases in canonical shape.
Dimensions stay small (single digits), which exact arithmetic handles
comfortably.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt, lcm
from typing import Iterable, List, Sequence, Tuple

Vector = List[Fraction]


def _to_fractions(rows: Iterable[Sequence[Fraction | int]]) -> List[Vector]:
    return [[Fraction(c) for c in row] for row in rows]


def _dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def _idot(u: Sequence[int], v: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(u, v))


def _gram_schmidt(basis: List[Vector]) -> Tuple[List[Vector], List[List[Fraction]], List[Fraction]]:
    """Orthogonalization; returns (b*, mu, |b*|^2) and insists on
    linear independence."""
    n = len(basis)
    ortho: List[Vector] = []
    mu: List[List[Fraction]] = [[Fraction(0)] * n for _ in range(n)]
    norms: List[Fraction] = []
    for i in range(n):
        w = list(basis[i])
        for j in range(i):
            mu[i][j] = _dot(basis[i], ortho[j]) / norms[j]
            w = [a - mu[i][j] * b for a, b in zip(w, ortho[j])]
        ortho.append(w)
        norms.append(_dot(w, w))
        if norms[i] == 0:
            raise ValueError("lattice basis rows must be linearly independent")
    return ortho, mu, norms


def lll_reduce(
    rows: Sequence[Sequence[Fraction | int]], delta: Fraction = Fraction(3, 4)
) -> Tuple[List[Vector], List[List[int]]]:
    """LLL-reduce the row basis; returns (reduced rows, transform U)
    with reduced = U * rows and U unimodular.

    Internally the rows are cleared of denominators and reduced with the
    all-integer variant of the algorithm (lam[i][j] = d[j]*mu[i][j] and
    d[i] = det Gram(b_1..b_i) stay integral throughout), which avoids
    rational normalization entirely; every division below is exact.
    Indices are 1-based to match the usual statement of the recurrences.
    """
    fracs = _to_fractions(rows)
    n = len(fracs)
    if n == 0:
        return [], []
    den = 1
    for row in fracs:
        for c in row:
            den = lcm(den, c.denominator)
    b: List[List[int]] = [[]] + [[int(c * den) for c in row] for row in fracs]
    u: List[List[int]] = [[]] + [
        [1 if i == j else 0 for j in range(n)] for i in range(n)
    ]
    d = [0] * (n + 1)
    d[0] = 1
    d[1] = _idot(b[1], b[1])
    if d[1] == 0:
        raise ValueError("lattice basis rows must be linearly independent")
    lam = [[0] * (n + 1) for _ in range(n + 1)]
    dnum, dden = delta.numerator, delta.denominator

    def extend(k: int) -> None:
        # fold row k into the orthogonalization state
        for j in range(1, k + 1):
            s = _idot(b[k], b[j])
            for i in range(1, j):
                s = (d[i] * s - lam[k][i] * lam[j][i]) // d[i - 1]
            if j < k:
                lam[k][j] = s
            else:
                d[k] = s
        if d[k] == 0:
            raise ValueError("lattice basis rows must be linearly independent")

    def size_reduce(k: int, l: int) -> None:
        if 2 * abs(lam[k][l]) > d[l]:
            r = (2 * lam[k][l] + d[l]) // (2 * d[l])  # nearest integer
            b[k] = [x - r * y for x, y in zip(b[k], b[l])]
            u[k] = [x - r * y for x, y in zip(u[k], u[l])]
            lam[k][l] -= r * d[l]
            for i in range(1, l):
                lam[k][i] -= r * lam[l][i]

    def swap(k: int, k_max: int) -> None:
        b[k], b[k - 1] = b[k - 1], b[k]
        u[k], u[k - 1] = u[k - 1], u[k]
        for j in range(1, k - 1):
            lam[k][j], lam[k - 1][j] = lam[k - 1][j], lam[k][j]
        lv = lam[k][k - 1]
        newd = (d[k - 2] * d[k] + lv * lv) // d[k - 1]
        for i in range(k + 1, k_max + 1):
            t = lam[i][k]
            lam[i][k] = (d[k] * lam[i][k - 1] - lv * t) // d[k - 1]
            lam[i][k - 1] = (newd * t + lv * lam[i][k]) // d[k]
        d[k - 1] = newd

    k_max = 1
    k = 2
    while k <= n:
        if k > k_max:
            k_max = k
            extend(k)
        size_reduce(k, k - 1)
        if (
            dden * d[k] * d[k - 2]
            < dnum * d[k - 1] * d[k - 1] - dden * lam[k][k - 1] ** 2
        ):
            swap(k, k_max)
            k = max(2, k - 1)
        else:
            for l in range(k - 2, 0, -1):
                size_reduce(k, l)
            k += 1
    reduced = [[Fraction(x, den) for x in row] for row in b[1:]]
    return reduced, u[1:]


def _sqrt_floor(q: Fraction) -> int:
    """floor(sqrt(q)) for q >= 0."""
    if q < 0:
        raise ValueError("negative radicand")
    lo = isqrt(q.numerator // q.denominator)
    while (lo + 1) * (lo + 1) <= q:
        lo += 1
    return lo


def short_vectors(
    rows: Sequence[Sequence[Fraction | int]], radius_sq: Fraction | int
) -> List[Tuple[Tuple[int, ...], Vector]]:
    """All nonzero lattice vectors v with |v|^2 <= radius_sq, as
    (coefficients with respect to the input rows, vector).

    One vector per +/- pair is reported (first nonzero coefficient
    positive); results are sorted by (|v|^2, coefficients).  Exact
    rational arithmetic end to end, so nothing inside the radius can
    be missed.
    """
    radius_sq = Fraction(radius_sq)
    reduced, transform = lll_reduce(rows)
    n = len(reduced)
    if n == 0:
        return []
    _, mu, norms = _gram_schmidt(reduced)
    found: List[Tuple[Tuple[int, ...], Vector]] = []
    coeff = [0] * n

    def descend(level: int, remaining: Fraction) -> None:
        # choose coeff[level]; centers come from already-fixed higher levels
        center = -sum(
            (mu[j][level] * coeff[j] for j in range(level + 1, n)), Fraction(0)
        )
        span = _sqrt_floor(remaining / norms[level]) + 1
        lo = center - span
        y_min = lo.numerator // lo.denominator  # floor
        for y in range(y_min, y_min + 2 * span + 2):
            off = (y - center) ** 2 * norms[level]
            if off > remaining:
                continue
            coeff[level] = y
            if level == 0:
                if any(coeff):
                    xs = [
                        sum(coeff[i] * transform[i][j] for i in range(n))
                        for j in range(n)
                    ]
                    first = next((x for x in xs if x != 0), 0)
                    if first > 0:
                        vec = [
                            sum(
                                (Fraction(xs[i]) * Fraction(rows[i][j]) for i in range(n)),
                                Fraction(0),
                            )
                            for j in range(len(rows[0]))
                        ]
                        found.append((tuple(xs), vec))
            else:
                descend(level - 1, remaining - off)
        coeff[level] = 0

    descend(n - 1, radius_sq)
    found.sort(key=lambda item: (_dot(item[1], item[1]), item[0]))
    return found


def hnf_rows(rows: Sequence[Sequence[int]]) -> List[List[int]]:
    """Row-style Hermite normal form of the integer row span.

    Returns the unique basis in echelon form with positive pivots and
    the entries above each pivot reduced into [0, pivot); zero rows are
    dropped.
    """
    mat = [list(map(int, row)) for row in rows]
    if not mat:
        return []
    cols = len(mat[0])
    pivot_row = 0
    pivots: List[Tuple[int, int]] = []
    for col in range(cols):
        pivot = None
        for r in range(pivot_row, len(mat)):
            if mat[r][col] != 0:
                pivot = r
                break
        if pivot is None:
            continue
        mat[pivot_row], mat[pivot] = mat[pivot], mat[pivot_row]
        # clear the column below with gcd row operations
        for r in range(pivot_row + 1, len(mat)):
            while mat[r][col] != 0:
                a, b = mat[pivot_row][col], mat[r][col]
                if abs(b) < abs(a):
                    mat[pivot_row], mat[r] = mat[r], mat[pivot_row]
                    continue
                q = mat[r][col] // mat[pivot_row][col]
                mat[r] = [x - q * y for x, y in zip(mat[r], mat[pivot_row])]
        if mat[pivot_row][col] < 0:
            mat[pivot_row] = [-x for x in mat[pivot_row]]
        pivots.append((pivot_row, col))
        pivot_row += 1
    # reduce entries above pivots
    for r, c in pivots:
        for above in range(r):
            q = mat[above][c] // mat[r][c]
            if q:
                mat[above] = [x - q * y for x, y in zip(mat[above], mat[r])]
    return [row for row in mat[:pivot_row]]
