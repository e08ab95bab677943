"""The bundled acceptance checks.

Each criterion is a self-contained callable that raises on failure and
returns a one-line detail string on success.  The CLI selftest and the
test suite both run exactly this list, so "the tests pass" and "the
installed tool passes its selftest" cannot drift apart.
"""

import json
import random
import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import factorial
from typing import Callable, List, Optional, Sequence, Tuple

from .._kernels import closure_order
from ..arithlocal import (
    QuadraticFormQ,
    QuaternionAlgebraQ,
    hilbert_symbol,
    relevant_places,
    twins,
)
from ..exactnum import PolyQ
from ..genericity import (
    CERTIFIED,
    DENSE,
    UNDETERMINED,
    _mod_p_flat,
    certify_generic_poly,
    dichotomy_check,
)
from ..rootsys import RootSystemType, minus_one_in_weyl, quadratic_sum, weyl_order
from ..spectra import hyperbolic_length
from ..weakcomm import SemisimpleElement, relation_lattice, weakly_commensurable
from .corpus import POLY_CORPUS
from .relbrute import product_profiles
from .weylbrute import brute_weyl_order


@dataclass(frozen=True)
class CriterionOutcome:
    name: str
    passed: bool
    seconds: float
    detail: str


@dataclass(frozen=True)
class Criterion:
    name: str
    summary: str
    budget_seconds: float
    run: Callable[[], str]


def _fail(message: str) -> None:
    raise AssertionError(message)


# ---------------------------------------------------------------------------
# 1. The B/C quadratic-sum ratio is (2n+2)/(2n-1), exactly.


def _check_bc_scaling() -> str:
    rng = random.Random(8520)
    checked = 0
    for n in range(2, 9):
        bn, cn = RootSystemType("B", n), RootSystemType("C", n)
        want = Fraction(2 * n + 2, 2 * n - 1)
        for _ in range(20):
            vec = [Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(n)]
            if all(v == 0 for v in vec):
                vec[0] = Fraction(1)
            got = quadratic_sum(cn, vec) / quadratic_sum(bn, vec)
            if got != want:
                _fail(f"ratio {got} != {want} for n={n}, x={vec}")
            checked += 1
    return f"{checked} random vectors, C/B ratio exactly (2n+2)/(2n-1)"


# ---------------------------------------------------------------------------
# 2. -1 misses the Weyl group exactly for A_n (n>=2), D_odd, E6.


def _check_minus_one() -> str:
    sweep: List[RootSystemType] = []
    sweep += [RootSystemType("A", r) for r in range(1, 9)]
    sweep += [RootSystemType("B", r) for r in range(2, 9)]
    sweep += [RootSystemType("C", r) for r in range(2, 9)]
    sweep += [RootSystemType("D", r) for r in range(3, 9)]
    sweep += [RootSystemType("E", r) for r in (6, 7, 8)]
    sweep += [RootSystemType("F", 4), RootSystemType("G", 2)]
    missing = {str(rst) for rst in sweep if not minus_one_in_weyl(rst)}
    want = {f"A{r}" for r in range(2, 9)} | {"D3", "D5", "D7"} | {"E6"}
    if missing != want:
        _fail(f"-1 absence set {sorted(missing)} != expected {sorted(want)}")
    return f"{len(sweep)} types swept, -1 absent exactly on A>=2, D odd, E6"


# ---------------------------------------------------------------------------
# 3. Hyperoctahedral orders match brute-force enumeration.


def _check_weyl_orders() -> str:
    for n in range(2, 9):
        want = (2**n) * factorial(n)
        orders = (
            weyl_order(RootSystemType("B", n)),
            weyl_order(RootSystemType("C", n)),
        )
        if orders != (want, want):
            _fail(f"weyl_order(B{n}/C{n}) = {orders} != {want}")
    for n in range(2, 7):
        brute = brute_weyl_order(RootSystemType("B", n))
        if brute != (2**n) * factorial(n):
            _fail(f"brute enumeration found {brute} elements for B{n}")
    return "formulas match for n=2..8, brute-force matrices for n=2..6"


# ---------------------------------------------------------------------------
# 4. The lattice engine agrees with unique-factorization search.


def _rational_pool() -> List[Tuple[SemisimpleElement, Tuple[Fraction, ...]]]:
    pool: List[Tuple[SemisimpleElement, Tuple[Fraction, ...]]] = []
    sl2 = [
        Fraction(2), Fraction(3), Fraction(5), Fraction(7),
        Fraction(3, 2), Fraction(5, 2), Fraction(5, 3), Fraction(7, 3),
        Fraction(4, 3), Fraction(9, 2), Fraction(-2), Fraction(-3),
        Fraction(-5, 2), Fraction(-4, 3), Fraction(8, 5), Fraction(12, 5),
    ]
    for q in sl2:
        g = SemisimpleElement.from_rows([[q, 0], [1, 1 / q]])
        pool.append((g, (q, 1 / q)))
    sl3 = [
        (Fraction(2), Fraction(3)), (Fraction(2), Fraction(5)),
        (Fraction(3), Fraction(5)), (Fraction(2), Fraction(-3)),
        (Fraction(3, 2), Fraction(5)), (Fraction(5, 2), Fraction(3)),
        (Fraction(-2), Fraction(-3)), (Fraction(4, 3), Fraction(9)),
        (Fraction(-1), Fraction(2)), (Fraction(5), Fraction(7)),
    ]
    for q1, q2 in sl3:
        q3 = 1 / (q1 * q2)
        rows = [[q1, 0, 0], [0, q2, 0], [0, 0, q3]]
        pool.append((SemisimpleElement.from_rows(rows), (q1, q2, q3)))
    for g, _ in pool:
        for row in g.matrix:
            for entry in row:
                if abs(entry.numerator) > 50 or entry.denominator > 50:
                    _fail(f"pool entry {entry} exceeds the height bound")
    return pool


def _check_weakcomm_oracle() -> str:
    bound = 10
    pool = _rational_pool()
    profiles = [product_profiles(eigs, bound) for _, eigs in pool]
    rng = random.Random(41)
    yes = 0
    for _ in range(200):
        i, j = rng.randrange(len(pool)), rng.randrange(len(pool))
        verdict = weakly_commensurable(pool[i][0], pool[j][0], bound)
        expected = bool(profiles[i] & profiles[j])
        if verdict.is_yes != expected:
            _fail(
                f"engine says {verdict.kind} but factorization says "
                f"{expected} for pair ({i}, {j})"
            )
        if verdict.is_yes:
            yes += 1
            for exps in verdict.witness:
                if max(abs(e) for e in exps) > bound:
                    _fail(f"witness {exps} leaves the exponent box")
    return f"200 seeded pairs agree with brute factorization ({yes} commensurable)"


# ---------------------------------------------------------------------------
# 5. Independent unit pairs give a rank-0 joint relation lattice.


_UNIT_TRACES = (3, 4, 5, 6, 8, 10, 11, 12, 16, 20)


def _check_joint_lattice() -> str:
    units = []
    for a in _UNIT_TRACES:
        g = SemisimpleElement.from_rows([[a, 1], [-1, 0]])
        units.append((g, g.eigenvalues()[0]))
    singles = [relation_lattice([t], bound=10) for _, t in units]
    for a, lat in zip(_UNIT_TRACES, singles):
        if lat.rank != 0:
            _fail(f"the unit of t^2-{a}t+1 satisfied a relation: {lat.basis}")
    instances = list(combinations(range(len(units)), 2))[:30]
    for i, j in instances:
        verdict = weakly_commensurable(units[i][0], units[j][0], 10)
        if verdict.kind != "no_up_to_bound":
            _fail(f"units {i},{j} unexpectedly share a power: {verdict}")
        joint = relation_lattice([units[i][1], units[j][1]], bound=10)
        if joint.rank != 0:
            _fail(f"joint lattice for units {i},{j} has rank {joint.rank}")
    return f"{len(instances)} instances: independent sides join to rank 0"


# ---------------------------------------------------------------------------
# 6. Genericity certificates match the resolvent oracle.


def _check_genericity() -> str:
    cert = certify_generic_poly(PolyQ.from_coeffs([-1, -1, 0, 1]), "A", 100)
    if cert.status != CERTIFIED:
        _fail(f"t^3-t-1 should certify within budget 100, got {cert.status}")
    cert = certify_generic_poly(PolyQ.from_coeffs([-1, -3, 0, 1]), "A", 10_000)
    if cert.status != UNDETERMINED:
        _fail(f"the cyclic cubic t^3-3t-1 must stay {UNDETERMINED}")
    for family, coeffs, full in POLY_CORPUS:
        got = certify_generic_poly(PolyQ.from_coeffs(coeffs), family, 1000)
        if (got.status == CERTIFIED) != full:
            _fail(
                f"{family} {coeffs}: certifier says {got.status}, "
                f"resolvent oracle says full={full}"
            )
    return f"two anchors plus {len(POLY_CORPUS)} corpus polynomials agree"


# ---------------------------------------------------------------------------
# 7. The certified geodesic-length interval is tight and correct.


def _check_length_interval() -> str:
    g = SemisimpleElement.from_rows([[2, 1], [1, 1]])
    length = hyperbolic_length(g, bits=64)
    # Pin the first ten digits: the interval must sit inside
    # [1.9248473002, 1.9248473003], which is stronger than containing
    # any one rounding of the true value.
    lo, hi = Fraction("1.9248473002"), Fraction("1.9248473003")
    if length.numeric.lo < lo or length.numeric.hi > hi:
        _fail(f"interval {length.numeric} escapes [{lo}, {hi}]")
    if length.numeric.width > Fraction(1, 10**9):
        _fail(f"interval width {length.numeric.width} exceeds 1e-9")
    return f"l([[2,1],[1,1]]) pinned to width {float(length.numeric.width):.2e}"


# ---------------------------------------------------------------------------
# 8. Hilbert symbols satisfy the product formula.


def _check_hilbert_product() -> str:
    rng = random.Random(97)
    for trial in range(500):
        a = Fraction(rng.choice([1, -1]) * rng.randint(1, 30), rng.randint(1, 30))
        b = Fraction(rng.choice([1, -1]) * rng.randint(1, 30), rng.randint(1, 30))
        total = 1
        for v in relevant_places((a, b)):
            total *= hilbert_symbol(a, b, v)
        if total != 1:
            _fail(f"product formula fails for ({a}, {b}) on trial {trial}")
    return "500 seeded symbols multiply to +1 over all relevant places"


# ---------------------------------------------------------------------------
# 9. The three worked twins instances produce their exact tables.


def _check_twins_tables() -> str:
    balanced = QuadraticFormQ(tuple(Fraction(c) for c in (1, 1, 1, 1, -1, -1, -1)))
    definite = QuadraticFormQ(tuple(Fraction(1) for _ in range(7)))
    split_alg = QuaternionAlgebraQ(Fraction(1), Fraction(1))
    hamilton = QuaternionAlgebraQ(Fraction(-1), Fraction(-1))

    def rows(verdict):
        return {
            str(r.place): (r.b_split, r.b_anisotropic, r.c_split, r.c_anisotropic)
            for r in verdict.table
        }

    first = twins(balanced, split_alg, False)
    if not first.twins or rows(first) != {
        "oo": (True, False, True, False),
        "2": (True, False, True, False),
    }:
        _fail(f"split/split table wrong: {first}")
    second = twins(definite, hamilton, True)
    if second.twins or rows(second) != {
        "oo": (False, True, False, True),
        "2": (True, False, False, False),
    }:
        _fail(f"definite/ramified table wrong: {second}")
    third = twins(balanced, hamilton, False)
    if third.twins or rows(third) != {
        "oo": (True, False, False, False),
        "2": (True, False, False, False),
    }:
        _fail(f"split/Hamilton table wrong: {third}")
    return "all three worked instances give their frozen per-place tables"


# ---------------------------------------------------------------------------
# 10. The dense branch of the dichotomy, corroborated mod 5.


def _check_dichotomy() -> str:
    g = SemisimpleElement.from_rows([[2, 1], [1, 1]])
    x = SemisimpleElement.from_rows([[1, 1], [0, 1]])
    report = dichotomy_check(g, x, "A", 1, p=5)
    if report.conclusion != DENSE or report.corroborated is not True:
        _fail(f"expected a corroborated dense verdict, got {report}")
    flats = [_mod_p_flat(el, 5) for el in (g, x)]
    order = closure_order(flats, 2, 5, 200)
    if order != 120:
        _fail(f"closure mod 5 has order {order}, expected |SL2(F5)| = 120")
    return "dense verdict with mod-5 closure of order 120"


# ---------------------------------------------------------------------------
# 11. Reports are byte-identical across runs and thread counts.


def _canonical_report(report: dict) -> bytes:
    stripped = {k: v for k, v in report.items() if k != "timings"}
    return json.dumps(stripped, sort_keys=True, separators=(",", ":")).encode()


def _check_determinism() -> str:
    from .. import cli

    problem = {
        "version": 1,
        "task": "generic",
        "payload": {
            "walk": {
                "generators": [
                    [["1", "2"], ["0", "1"]],
                    [["1", "0"], ["2", "1"]],
                ],
                "length": 8,
                "count": 10,
            }
        },
        "options": {"seed": 7, "primeBudget": 300},
    }
    runs = [
        _canonical_report(cli.run_problem(problem, threads=threads))
        for threads in (1, 8, 1)
    ]
    if runs[0] != runs[1]:
        _fail("reports differ between 1 and 8 threads")
    if runs[0] != runs[2]:
        _fail("reports differ between two single-threaded runs")
    return f"three runs, {len(runs[0])} canonical bytes each, all identical"


CRITERIA: Tuple[Criterion, ...] = (
    Criterion("bc-scaling", "exact C/B quadratic-sum ratio", 1.0, _check_bc_scaling),
    Criterion("minus-one", "-1 in W exactly off A>=2, D odd, E6", 1.0, _check_minus_one),
    Criterion("weyl-orders", "hyperoctahedral orders vs brute force", 10.0, _check_weyl_orders),
    Criterion("weakcomm-oracle", "lattice engine vs unique factorization", 60.0, _check_weakcomm_oracle),
    Criterion("joint-lattice", "independent unit pairs join to rank 0", 30.0, _check_joint_lattice),
    Criterion("genericity", "certificates vs the resolvent oracle", 120.0, _check_genericity),
    Criterion("length-interval", "certified geodesic length of a fixed loxodromic", 1.0, _check_length_interval),
    Criterion("hilbert-product", "product formula over relevant places", 5.0, _check_hilbert_product),
    Criterion("twins-tables", "frozen per-place tables for three instances", 1.0, _check_twins_tables),
    Criterion("dichotomy", "dense verdict corroborated mod 5", 5.0, _check_dichotomy),
    Criterion("determinism", "byte-identical reports across thread counts", 10.0, _check_determinism),
)


def match_criteria(pattern: Optional[str]) -> Tuple[Criterion, ...]:
    """Criteria whose name contains the pattern (all of them for None)."""
    if pattern is None:
        return CRITERIA
    return tuple(c for c in CRITERIA if pattern in c.name)


def run_criteria(
    pattern: Optional[str] = None,
    selection: Optional[Sequence[Criterion]] = None,
) -> List[CriterionOutcome]:
    chosen = tuple(selection) if selection is not None else match_criteria(pattern)
    outcomes: List[CriterionOutcome] = []
    for criterion in chosen:
        start = time.perf_counter()
        try:
            detail = criterion.run()
            passed = True
        except Exception as exc:  # noqa: BLE001 - selftest must not crash
            detail = f"{type(exc).__name__}: {exc}"
            passed = False
        outcomes.append(
            CriterionOutcome(
                criterion.name, passed, time.perf_counter() - start, detail
            )
        )
    return outcomes
