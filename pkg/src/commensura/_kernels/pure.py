"""Pure-Python kernels for mod-p polynomial arithmetic and group closure.

These are the fallback implementations of the hot loops; the compiled
module ``_speedups`` provides the same functions with identical
semantics.  Polynomials are dense lists of ints in [0, p), ascending,
with no trailing zeros.  Matrices are flat tuples of length dim*dim.
"""

from __future__ import annotations

from collections import deque
from typing import Sequence, Tuple

BACKEND_NAME = "pure"


def poly_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def poly_mul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return poly_trim(out)


def poly_rem(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not b:
        raise ZeroDivisionError("polynomial remainder by zero")
    rem = [c % p for c in a]
    poly_trim(rem)
    db = len(b) - 1
    inv_lead = pow(b[-1], -1, p)
    while len(rem) - 1 >= db:
        coef = rem[-1] * inv_lead % p
        shift = len(rem) - 1 - db
        for i, bc in enumerate(b):
            rem[shift + i] = (rem[shift + i] - coef * bc) % p
        poly_trim(rem)
    return rem


def poly_gcd(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    x, y = list(a), list(b)
    while y:
        x, y = y, poly_rem(x, y, p)
    if x:
        inv = pow(x[-1], -1, p)
        x = [c * inv % p for c in x]
    return x


def poly_powmod(base: Sequence[int], e: int, mod: Sequence[int], p: int) -> list[int]:
    result = [1]
    acc = poly_rem(base, mod, p)
    while e:
        if e & 1:
            result = poly_rem(poly_mul(result, acc, p), mod, p)
        e >>= 1
        if e:
            acc = poly_rem(poly_mul(acc, acc, p), mod, p)
    return result


def _mat_mul_flat(a: Tuple[int, ...], b: Tuple[int, ...], dim: int, p: int) -> Tuple[int, ...]:
    out = [0] * (dim * dim)
    for i in range(dim):
        for k in range(dim):
            aik = a[i * dim + k]
            if aik:
                row = i * dim
                col = k * dim
                for j in range(dim):
                    out[row + j] = (out[row + j] + aik * b[col + j]) % p
    return tuple(out)


def closure_order(gens: Sequence[Tuple[int, ...]], dim: int, p: int, limit: int) -> int:
    """Size of the multiplicative closure of gens in GL_dim(F_p).

    Stops once the closure exceeds ``limit`` and returns limit + 1; the
    generators must be invertible mod p, so the closure is a group.
    """
    if p < 256:
        key_of = bytes
    else:
        key_of = lambda m: repr(m).encode()  # noqa: E731
    identity = tuple(1 if i % (dim + 1) == 0 else 0 for i in range(dim * dim))
    seen = {key_of(identity)}
    queue = deque([identity])
    gens = [tuple(c % p for c in g) for g in gens]
    while queue:
        m = queue.popleft()
        for g in gens:
            prod = _mat_mul_flat(m, g, dim, p)
            key = key_of(prod)
            if key not in seen:
                seen.add(key)
                if len(seen) > limit:
                    return limit + 1
                queue.append(prod)
    return len(seen)
