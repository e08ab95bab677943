"""The compiled and pure kernel backends must be interchangeable."""

import random

import pytest

from commensura._kernels import (
    BACKEND_NAME,
    available_backends,
    closure_order,
    poly_gcd,
    poly_mul,
    poly_powmod,
    poly_rem,
)

BACKENDS = available_backends()


def test_pure_backend_always_present():
    assert "pure" in BACKENDS
    assert BACKEND_NAME in BACKENDS


needs_compiled = pytest.mark.skipif(
    "compiled" not in BACKENDS, reason="extension module not built"
)


def _random_poly(rng, p, max_deg):
    deg = rng.randint(0, max_deg)
    coeffs = [rng.randrange(p) for _ in range(deg)] + [rng.randrange(1, p)]
    return coeffs


@needs_compiled
def test_backends_agree_on_poly_ops():
    pure, fast = BACKENDS["pure"], BACKENDS["compiled"]
    rng = random.Random(20)
    for p in (2, 3, 17, 10007):
        for _ in range(25):
            a = _random_poly(rng, p, 14)
            b = _random_poly(rng, p, 9)
            assert list(fast.poly_mul(a, b, p)) == list(pure.poly_mul(a, b, p))
            assert list(fast.poly_rem(a, b, p)) == list(pure.poly_rem(a, b, p))
            assert list(fast.poly_gcd(a, b, p)) == list(pure.poly_gcd(a, b, p))
            e = rng.randrange(1, p * p)
            assert list(fast.poly_powmod(a, e, b, p)) == list(
                pure.poly_powmod(a, e, b, p)
            )


@needs_compiled
def test_backends_agree_on_closure_order():
    pure, fast = BACKENDS["pure"], BACKENDS["compiled"]
    gens = [(1, 1, 0, 1), (1, 0, 1, 1)]
    for p in (3, 5, 7):
        assert fast.closure_order(gens, 2, p, 10**6) == pure.closure_order(
            gens, 2, p, 10**6
        )


def test_powmod_matches_fermat():
    # t^p = t (mod t^p - t, p) and a^(p-1) = 1 for scalars
    for p in (3, 5, 7):
        mod = [0, 2, 1]  # t^2 + 2t
        got = poly_powmod([0, 1], p, mod, p)
        naive = [0, 1]
        for _ in range(p - 1):
            naive = poly_rem(poly_mul(naive, [0, 1], p), mod, p)
        assert list(got) == list(naive)


def test_gcd_is_monic_common_divisor():
    p = 11
    shared = [3, 1]
    a = poly_mul(shared, [1, 0, 1], p)
    b = poly_mul(shared, [5, 1], p)
    g = poly_gcd(a, b, p)
    assert list(g) == [3, 1]
    assert list(poly_rem(a, g, p)) == []


def test_closure_order_sl2_f5():
    gens = [(1, 1, 0, 1), (1, 0, 1, 1)]
    assert closure_order(gens, 2, 5, 1000) == 120


def test_closure_order_respects_limit():
    gens = [(1, 1, 0, 1), (1, 0, 1, 1)]
    assert closure_order(gens, 2, 31, 50) == 51  # limit + 1 signals overflow


def test_closure_order_cyclic_subgroup():
    # a single unipotent generates exactly p elements
    for p in (3, 7, 13):
        assert closure_order([(1, 1, 0, 1)], 2, p, 100) == p
