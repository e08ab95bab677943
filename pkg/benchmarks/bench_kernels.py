#!/usr/bin/env python3
"""Time the pure-Python kernels against the compiled extension.

The two backends implement identical mod-p polynomial arithmetic and
the group-closure walk; this script times matched workloads on each
and prints the speedup.  Outputs are also cross-checked, so a run
doubles as an equivalence test on larger inputs than the test suite
uses.

    python3 benchmarks/bench_kernels.py [--repeat N] [--seed S]
"""

import argparse
import random
import time

from commensura._kernels import available_backends


def _time(fn, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def _workloads(seed):
    rng = random.Random(seed)
    p = 10007
    a = [rng.randrange(p) for _ in range(400)] + [1]
    b = [rng.randrange(p) for _ in range(200)] + [1]
    mod = [rng.randrange(p) for _ in range(120)] + [1]
    sl2_gens = [
        (1, 2, 0, 1),
        (1, 0, 2, 1),
    ]
    return [
        ("poly_mul deg 400 x 200", lambda k: k.poly_mul(a, b, p)),
        ("poly_rem deg 600 by 120", lambda k: k.poly_rem(k.poly_mul(a, b, p), mod, p)),
        ("poly_gcd deg 400, 200", lambda k: k.poly_gcd(a, b, p)),
        (
            "poly_powmod t^(p^2) mod deg 120",
            lambda k: k.poly_powmod([0, 1], p * p, mod, p),
        ),
        (
            "closure_order SL2(F_19)",
            lambda k: k.closure_order(sl2_gens, 2, 19, 10_000),
        ),
    ]


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3, help="timing repetitions")
    parser.add_argument("--seed", type=int, default=1, help="workload seed")
    args = parser.parse_args()

    backends = available_backends()
    if "compiled" not in backends:
        print("compiled extension not importable; timing pure backend only")
    names = list(backends)
    print(f"{'workload':<34}" + "".join(f"{n:>12}" for n in names) + f"{'speedup':>10}")
    for label, work in _workloads(args.seed):
        times = {}
        results = {}
        for name, module in backends.items():
            times[name], results[name] = _time(lambda m=module: work(m), args.repeat)
        canonical = {
            name: list(r) if isinstance(r, (list, tuple)) else r
            for name, r in results.items()
        }
        assert len(set(map(repr, canonical.values()))) == 1, f"backends disagree on {label}"
        row = f"{label:<34}" + "".join(f"{times[n] * 1e3:>10.2f}ms" for n in names)
        if "compiled" in times and "pure" in times and times["compiled"] > 0:
            row += f"{times['pure'] / times['compiled']:>9.1f}x"
        print(row)


if __name__ == "__main__":
    main()
