"""Weyl groups of classical type by exhaustive matrix enumeration.

Everything is counted by listing actual matrices: permutation matrices
for type A, signed permutation matrices for B/C, the even-sign subgroup
for D.  Slow on purpose and capped at ranks where slow is still cheap.
"""

from itertools import permutations, product
from typing import Iterator, List, Tuple

from ..errors import UnsupportedFamily, ValidationError
from ..rootsys import RootSystemType

Matrix = Tuple[Tuple[int, ...], ...]

_MAX_BRUTE_RANK = 6


def _perm_sign_matrix(perm: Tuple[int, ...], signs: Tuple[int, ...]) -> Matrix:
    n = len(perm)
    rows = [[0] * n for _ in range(n)]
    for j, (i, s) in enumerate(zip(perm, signs)):
        rows[i][j] = s
    return tuple(tuple(r) for r in rows)


def _group_elements(rst: RootSystemType) -> Iterator[Matrix]:
    n = rst.rank
    if rst.family == "A":
        dim = n + 1
        ones = (1,) * dim
        for perm in permutations(range(dim)):
            yield _perm_sign_matrix(perm, ones)
        return
    if rst.family in ("B", "C"):
        for perm in permutations(range(n)):
            for signs in product((1, -1), repeat=n):
                yield _perm_sign_matrix(perm, signs)
        return
    if rst.family == "D":
        for perm in permutations(range(n)):
            for signs in product((1, -1), repeat=n):
                flips = sum(1 for s in signs if s < 0)
                if flips % 2 == 0:
                    yield _perm_sign_matrix(perm, signs)
        return
    raise UnsupportedFamily(f"no matrix model to enumerate for {rst}")


def _check_rank(rst: RootSystemType) -> None:
    if rst.rank > _MAX_BRUTE_RANK:
        raise ValidationError(
            f"brute enumeration is capped at rank {_MAX_BRUTE_RANK}, got {rst}"
        )


def brute_weyl_order(rst: RootSystemType) -> int:
    """Group order by counting distinct matrices."""
    _check_rank(rst)
    return len(set(_group_elements(rst)))


def _acts_as_minus_one(mat: Matrix, rst: RootSystemType) -> bool:
    if rst.family == "A":
        # Restrict to the sum-zero subspace: check the differences
        # e_i - e_{i+1}, which span it.
        dim = rst.rank + 1
        for i in range(dim - 1):
            image = [mat[r][i] - mat[r][i + 1] for r in range(dim)]
            target = [0] * dim
            target[i], target[i + 1] = -1, 1
            if image != target:
                return False
        return True
    n = rst.rank
    return mat == tuple(
        tuple(-1 if r == c else 0 for c in range(n)) for r in range(n)
    )


def brute_minus_one_in_weyl(rst: RootSystemType) -> bool:
    """Whether some enumerated element negates the reflection space."""
    _check_rank(rst)
    return any(_acts_as_minus_one(m, rst) for m in _group_elements(rst))


def _mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
        for i in range(n)
    )


def _transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a))


def brute_class_count(rst: RootSystemType) -> int:
    """Number of conjugacy classes by orbit-partitioning the group.

    Signed permutation matrices are orthogonal, so the inverse needed
    for conjugation is just the transpose.  Quadratic in the group
    order; keep the rank small.
    """
    _check_rank(rst)
    elements = list(set(_group_elements(rst)))
    if len(elements) > 50_000:
        raise ValidationError(f"{rst} is too large to partition into classes")
    remaining = set(elements)
    count = 0
    while remaining:
        g = next(iter(remaining))
        orbit = {_mat_mul(_mat_mul(h, g), _transpose(h)) for h in elements}
        remaining -= orbit
        count += 1
    return count


def brute_class_types(rst: RootSystemType) -> List[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    """Signed cycle types realized in B/C, one per conjugacy class.

    Walks each permutation's cycles and classifies a cycle as negative
    when the signs along it multiply to -1.
    """
    if rst.family not in ("B", "C"):
        raise UnsupportedFamily("signed cycle types only make sense for B/C")
    _check_rank(rst)
    n = rst.rank
    seen = set()
    for perm in permutations(range(n)):
        for signs in product((1, -1), repeat=n):
            pos: List[int] = []
            neg: List[int] = []
            visited = [False] * n
            for start in range(n):
                if visited[start]:
                    continue
                length, sign, i = 0, 1, start
                while not visited[i]:
                    visited[i] = True
                    sign *= signs[i]
                    length += 1
                    i = perm[i]
                (pos if sign > 0 else neg).append(length)
            seen.add((tuple(sorted(pos, reverse=True)), tuple(sorted(neg, reverse=True))))
    return sorted(seen)
