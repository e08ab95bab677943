# cython: boundscheck=False, cdivision=True
"""Compiled kernels for mod-p polynomial arithmetic and group closure.

Mirrors ``pure`` exactly: dense int lists in [0, p) ascending for
polynomials, flat tuples for matrices.  Coefficients must satisfy
p < 2**31 so products fit in 64 bits.
"""

from collections import deque

from cpython cimport array
import array

BACKEND_NAME = "compiled"


cdef array.array _from_list(a):
    return array.array("q", a)


cdef array.array _zeros(Py_ssize_t n):
    return array.array("q", bytes(8 * n))


cdef list _trim_list(list out):
    while out and out[-1] == 0:
        out.pop()
    return out


def poly_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def poly_mul(a, b, long long p):
    cdef Py_ssize_t la = len(a), lb = len(b)
    if la == 0 or lb == 0:
        return []
    cdef array.array aa = _from_list(a)
    cdef array.array bb = _from_list(b)
    cdef array.array oo = _zeros(la + lb - 1)
    cdef long long* av = aa.data.as_longlongs
    cdef long long* bv = bb.data.as_longlongs
    cdef long long* ov = oo.data.as_longlongs
    cdef Py_ssize_t i, j
    cdef long long ai
    for i in range(la):
        ai = av[i]
        if ai != 0:
            for j in range(lb):
                ov[i + j] = (ov[i + j] + ai * bv[j]) % p
    return _trim_list(oo.tolist())


def poly_rem(a, b, long long p):
    cdef Py_ssize_t lb = len(b)
    if lb == 0:
        raise ZeroDivisionError("polynomial remainder by zero")
    cdef array.array rr = _from_list([c % p for c in a])
    cdef long long* rv = rr.data.as_longlongs
    cdef Py_ssize_t lr = len(rr)
    while lr and rv[lr - 1] == 0:
        lr -= 1
    cdef long long inv_lead = pow(b[lb - 1], -1, p)
    cdef array.array bb = _from_list(b)
    cdef long long* bv = bb.data.as_longlongs
    cdef Py_ssize_t db = lb - 1, shift, i
    cdef long long coef
    while lr - 1 >= db and lr > 0:
        coef = rv[lr - 1] * inv_lead % p
        shift = lr - 1 - db
        for i in range(lb):
            rv[shift + i] = (rv[shift + i] - coef * bv[i]) % p
            if rv[shift + i] < 0:
                rv[shift + i] += p
        while lr and rv[lr - 1] == 0:
            lr -= 1
    return rr.tolist()[:lr]


def poly_gcd(a, b, long long p):
    x, y = list(a), list(b)
    while y:
        x, y = y, poly_rem(x, y, p)
    cdef long long inv
    if x:
        inv = pow(x[-1], -1, p)
        x = [c * inv % p for c in x]
    return x


def poly_powmod(base, e, mod, long long p):
    result = [1]
    acc = poly_rem(base, mod, p)
    e = int(e)
    while e:
        if e & 1:
            result = poly_rem(poly_mul(result, acc, p), mod, p)
        e >>= 1
        if e:
            acc = poly_rem(poly_mul(acc, acc, p), mod, p)
    return result


def closure_order(gens, int dim, int p, long long limit):
    """BFS closure size in GL_dim(F_p), capped at limit (returns limit+1).

    Requires p < 256 (matrices are packed into bytes); the dispatcher
    falls back to the pure kernel for larger p.
    """
    if p >= 256:
        raise ValueError("compiled closure kernel requires p < 256")
    if dim * dim > 64:
        raise ValueError("dimension too large")
    cdef int n2 = dim * dim
    gens_b = [bytes([c % p for c in gen]) for gen in gens]
    identity = bytes([1 if i % (dim + 1) == 0 else 0 for i in range(n2)])
    seen = {identity}
    queue = deque([identity])
    cdef unsigned char[64] buf
    cdef const unsigned char* mb
    cdef const unsigned char* gb
    cdef int i, j, k
    cdef long long acc
    cdef bytes m, g, prod
    while queue:
        m = queue.popleft()
        mb = m
        for g in gens_b:
            gb = g
            for i in range(dim):
                for j in range(dim):
                    acc = 0
                    for k in range(dim):
                        acc += (<long long> mb[i * dim + k]) * gb[k * dim + j]
                    buf[i * dim + j] = <unsigned char> (acc % p)
            prod = (<char*> buf)[:n2]
            if prod not in seen:
                seen.add(prod)
                if len(seen) > limit:
                    return limit + 1
                queue.append(prod)
    return len(seen)
