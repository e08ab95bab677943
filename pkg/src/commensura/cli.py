"""Batch front end: JSON problem files in, deterministic reports out.

Problems name one task (rootinfo, weakcomm, generic, spectrum, twins,
dichotomy) plus a payload and options; reports echo the task and carry
verdicts, certificates and, for twins, the per-place table.  Exactness
survives serialization because every rational and big integer rides as
a decimal string and every certified interval as a [lo, hi] pair of
rational strings — no floats except in the `timings` block, which is
the one part of a report excluded from reproducibility comparisons.

`run_problem` is the pure core: problem dict in, report dict out, same
bytes for the same problem regardless of thread count.  The command
line wraps it with file handling, flag overrides and exit codes (0
completed, 2 invalid input; `selftest` exits 1 on a failed criterion).
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from importlib import metadata
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from .arithlocal import QuadraticFormQ, QuaternionAlgebraQ, twins
from .errors import CommensuraError, UnsupportedFamily
from .exactnum import PolyQ
from .genericity import (
    dichotomy_check,
    is_generic_element,
    walk_words,
)
from .rootsys import RootSystemType, conjugacy_classes, minus_one_in_weyl, weyl_order
from .spectra import rational_length_spectrum
from .weakcomm import SemisimpleElement, weakly_commensurable

try:
    _VERSION = metadata.version("commensura")
except metadata.PackageNotFoundError:  # running from a source tree
    _VERSION = "0.1.0"

TOOL_VERSION = f"commensura {_VERSION}"

TASKS = ("rootinfo", "weakcomm", "generic", "spectrum", "twins", "dichotomy")

_OPTION_DEFAULTS: Dict[str, Optional[int]] = {
    "exponentBound": 20,
    "primeBudget": 1000,
    "wordLength": 6,
    "precisionBits": 128,
    "seed": None,
}


class ProblemError(ValueError):
    """Invalid problem data; `token` is the offending literal, if any."""

    def __init__(self, message: str, token: Optional[str] = None):
        super().__init__(message)
        self.token = token


# ---------------------------------------------------------------------------
# Parsing the payload


def _rational(value: Any, where: str) -> Fraction:
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise ProblemError(f"{where}: rationals must be strings or integers")
    try:
        return Fraction(str(value))
    except (ValueError, ZeroDivisionError):
        raise ProblemError(f'{where}: malformed rational "{value}"', str(value))


def _matrix(value: Any, where: str) -> List[List[Fraction]]:
    if (
        not isinstance(value, list)
        or not value
        or any(not isinstance(row, list) for row in value)
    ):
        raise ProblemError(f"{where}: matrices are non-empty arrays of rows")
    width = len(value[0])
    if any(len(row) != width for row in value):
        raise ProblemError(f"{where}: matrix rows have unequal lengths")
    return [
        [_rational(x, f"{where}[{i}][{j}]") for j, x in enumerate(row)]
        for i, row in enumerate(value)
    ]


def _coeffs(value: Any, where: str) -> List[Fraction]:
    if not isinstance(value, list) or not value:
        raise ProblemError(f"{where}: expected a non-empty coefficient array")
    return [_rational(x, f"{where}[{i}]") for i, x in enumerate(value)]


def _integer(value: Any, where: str, minimum: Optional[int] = None) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ProblemError(f"{where}: expected an integer")
    if minimum is not None and value < minimum:
        raise ProblemError(f"{where}: must be at least {minimum}")
    return value


def _boolean(value: Any, where: str) -> bool:
    if not isinstance(value, bool):
        raise ProblemError(f"{where}: expected true or false")
    return value


def _string(value: Any, where: str) -> str:
    if not isinstance(value, str):
        raise ProblemError(f"{where}: expected a string")
    return value


def _check_keys(obj: Dict[str, Any], allowed: Sequence[str], where: str) -> None:
    extra = sorted(set(obj) - set(allowed))
    if extra:
        raise ProblemError(f"{where}: unknown keys {extra}", extra[0])


def _options(problem: Dict[str, Any]) -> Dict[str, Optional[int]]:
    raw = problem.get("options", {})
    if not isinstance(raw, dict):
        raise ProblemError("options: expected an object")
    _check_keys(raw, tuple(_OPTION_DEFAULTS), "options")
    resolved = dict(_OPTION_DEFAULTS)
    for key, value in raw.items():
        minimum = 0 if key == "seed" else 1
        resolved[key] = _integer(value, f"options.{key}", minimum)
    return resolved


# ---------------------------------------------------------------------------
# Rendering exact values into JSON


def _frac_str(x: Fraction) -> str:
    return str(x)


def _interval_pair(iv) -> List[str]:
    return [_frac_str(iv.lo), _frac_str(iv.hi)]


def _poly_strs(poly: PolyQ) -> List[str]:
    return [_frac_str(c) for c in poly.coeffs]


# ---------------------------------------------------------------------------
# Task runners: payload + options in, (verdicts, certificates, tables) out


def _run_rootinfo(payload, options, threads):
    _check_keys(payload, ("family", "rank"), "payload")
    family = _string(payload.get("family"), "payload.family")
    rank = _integer(payload.get("rank"), "payload.rank", 1)
    try:
        rst = RootSystemType(family, rank)
    except UnsupportedFamily as exc:
        raise ProblemError(f"payload: {exc}", family)
    verdicts = {
        "weylOrder": str(weyl_order(rst)),
        "minusOneInWeyl": minus_one_in_weyl(rst),
    }
    certificates: Dict[str, Any] = {"rootSystem": str(rst)}
    try:
        classes = conjugacy_classes(rst)
    except UnsupportedFamily:
        pass  # exceptional families: order and -1 only
    else:
        verdicts["classCount"] = len(classes)
        verdicts["nontrivialClassCount"] = len(classes) - 1
        certificates["classes"] = [str(c) for c in classes]
    return verdicts, certificates, None


def _element(payload, key, kind) -> SemisimpleElement:
    rows = _matrix(payload.get(key), f"payload.{key}")
    return SemisimpleElement.from_rows(rows, kind=kind)


def _run_weakcomm(payload, options, threads):
    _check_keys(payload, ("left", "right", "kind"), "payload")
    kind = _string(payload.get("kind", "SL"), "payload.kind")
    left = _element(payload, "left", kind)
    right = _element(payload, "right", kind)
    verdict = weakly_commensurable(
        left, right, bound=options["exponentBound"], precision_bits=options["precisionBits"]
    )
    verdicts = {
        "weaklyCommensurable": verdict.is_yes,
        "kind": verdict.kind,
        "exponentBound": verdict.bound,
    }
    certificates: Dict[str, Any] = {}
    if verdict.witness is not None:
        certificates["witnessLeft"] = list(verdict.witness[0])
        certificates["witnessRight"] = list(verdict.witness[1])
    if verdict.common_value is not None:
        certificates["commonValueMinpoly"] = _poly_strs(verdict.common_value.minpoly)
    return verdicts, certificates, None


def _certificate_json(cert) -> Dict[str, Any]:
    return {
        "status": cert.status,
        "witnessPrimes": list(cert.primes_used),
        "witnessedClasses": sorted(str(c) for c in cert.witnessed),
    }


def _run_generic(payload, options, threads):
    _check_keys(payload, ("matrix", "walk", "kind"), "payload")
    budget = options["primeBudget"]
    if ("matrix" in payload) == ("walk" in payload):
        raise ProblemError('payload: provide exactly one of "matrix" or "walk"')
    if "matrix" in payload:
        kind = _string(payload.get("kind", "SL"), "payload.kind")
        el = _element(payload, "matrix", kind)
        cert = is_generic_element(el, budget)
        return {"status": cert.status}, _certificate_json(cert), None
    walk = payload["walk"]
    if not isinstance(walk, dict):
        raise ProblemError("payload.walk: expected an object")
    _check_keys(walk, ("generators", "length", "count", "kind"), "payload.walk")
    kind = _string(walk.get("kind", "SL"), "payload.walk.kind")
    raw_gens = walk.get("generators")
    if not isinstance(raw_gens, list) or not raw_gens:
        raise ProblemError("payload.walk.generators: expected a non-empty array")
    gens = [
        SemisimpleElement.from_rows(
            _matrix(rows, f"payload.walk.generators[{i}]"), kind=kind
        )
        for i, rows in enumerate(raw_gens)
    ]
    length = _integer(walk.get("length"), "payload.walk.length", 0)
    count = _integer(walk.get("count"), "payload.walk.count", 1)
    if options["seed"] is None:
        raise ProblemError("options.seed: required for random-walk sampling")
    words = walk_words(gens, length, count, options["seed"])
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            certs = list(pool.map(lambda w: is_generic_element(w, budget), words))
    else:
        certs = [is_generic_element(w, budget) for w in words]
    tally: Dict[str, int] = {}
    for cert in certs:
        tally[cert.status] = tally.get(cert.status, 0) + 1
    certified = tally.get("Certified", 0)
    verdicts = {
        "statusCounts": dict(sorted(tally.items())),
        "genericProportion": _frac_str(Fraction(certified, len(certs))),
    }
    certificates = {"words": [_certificate_json(c) for c in certs]}
    return verdicts, certificates, None


def _run_spectrum(payload, options, threads):
    _check_keys(payload, ("generators",), "payload")
    raw_gens = payload.get("generators")
    if not isinstance(raw_gens, list) or not raw_gens:
        raise ProblemError("payload.generators: expected a non-empty array")
    gens = [
        _matrix(rows, f"payload.generators[{i}]") for i, rows in enumerate(raw_gens)
    ]
    sample = rational_length_spectrum(
        gens, options["wordLength"], bits=options["precisionBits"]
    )
    entries = [
        {
            "word": list(word),
            "eigenvalueMinpoly": _poly_strs(length.t.minpoly),
            "lengthInterval": _interval_pair(length.numeric),
        }
        for word, length in sample.entries
    ]
    verdicts = {"hyperbolicWords": len(entries)}
    return verdicts, {"entries": entries}, None


def _run_twins(payload, options, threads):
    _check_keys(
        payload, ("q", "a", "b", "hermitianDefiniteAtInfinity"), "payload"
    )
    diag = _coeffs(payload.get("q"), "payload.q")
    a = _rational(payload.get("a"), "payload.a")
    b = _rational(payload.get("b"), "payload.b")
    definite = _boolean(
        payload.get("hermitianDefiniteAtInfinity"),
        "payload.hermitianDefiniteAtInfinity",
    )
    verdict = twins(QuadraticFormQ(tuple(diag)), QuaternionAlgebraQ(a, b), definite)
    tables = {
        str(row.place): {
            "bSplit": row.b_split,
            "bAnisotropic": row.b_anisotropic,
            "cSplit": row.c_split,
            "cAnisotropic": row.c_anisotropic,
            "agree": row.agree,
        }
        for row in verdict.table
    }
    return {"twins": verdict.twins}, {}, tables


def _run_dichotomy(payload, options, threads):
    _check_keys(payload, ("g", "x", "family", "rank", "p"), "payload")
    family = _string(payload.get("family"), "payload.family")
    rank = _integer(payload.get("rank"), "payload.rank", 1)
    p = _integer(payload.get("p", 5), "payload.p", 2)
    g = _matrix(payload.get("g"), "payload.g")
    x = _matrix(payload.get("x"), "payload.x")
    report = dichotomy_check(g, x, family, rank, p=p)
    verdicts: Dict[str, Any] = {"conclusion": report.conclusion}
    if report.corroborated is not None:
        verdicts["corroboratedModP"] = report.corroborated
    certificates: Dict[str, Any] = {
        "rootSystem": str(report.root_system),
        "prime": p,
    }
    if report.long_root is not None:
        certificates["longRootType"] = report.long_root
    return verdicts, certificates, None


_RUNNERS: Dict[str, Callable] = {
    "rootinfo": _run_rootinfo,
    "weakcomm": _run_weakcomm,
    "generic": _run_generic,
    "spectrum": _run_spectrum,
    "twins": _run_twins,
    "dichotomy": _run_dichotomy,
}


# ---------------------------------------------------------------------------
# The pure core


def _canonical_bytes(problem: Dict[str, Any]) -> bytes:
    return json.dumps(problem, sort_keys=True, separators=(",", ":")).encode()


def run_problem(problem: Dict[str, Any], threads: int = 1) -> Dict[str, Any]:
    """Execute one problem dict and return the structured report dict.

    Deterministic: the same problem (seed included) produces the same
    report — `timings` aside — at any thread count.
    """
    if not isinstance(problem, dict):
        raise ProblemError("problem file must contain a JSON object")
    _check_keys(problem, ("version", "task", "payload", "options"), "problem")
    version = problem.get("version")
    if version != 1:
        raise ProblemError(f"version: expected 1, got {version!r}", str(version))
    task = problem.get("task")
    if task not in TASKS:
        raise ProblemError(
            f"task: expected one of {', '.join(TASKS)}; got {task!r}",
            str(task),
        )
    payload = problem.get("payload")
    if not isinstance(payload, dict):
        raise ProblemError("payload: expected an object")
    options = _options(problem)
    if threads < 1:
        raise ProblemError("threads: must be at least 1")

    start = time.perf_counter()
    verdicts, certificates, tables = _RUNNERS[task](payload, options, threads)
    elapsed = time.perf_counter() - start

    report: Dict[str, Any] = {
        "version": 1,
        "task": task,
        "toolVersion": TOOL_VERSION,
        "inputHash": hashlib.sha256(_canonical_bytes(problem)).hexdigest(),
        "options": {k: v for k, v in options.items() if v is not None},
        "verdicts": verdicts,
        "certificates": certificates,
        "timings": {"totalSeconds": round(elapsed, 6)},
    }
    if tables is not None:
        report["perPlaceTables"] = tables
    return report


def report_json(report: Dict[str, Any]) -> str:
    return json.dumps(report, sort_keys=True, indent=2) + "\n"


# ---------------------------------------------------------------------------
# Human-readable rendering


def _use_color(stream) -> bool:
    if os.environ.get("NO_COLOR") is not None:
        return False
    return hasattr(stream, "isatty") and stream.isatty()


def _paint(text: str, code: str, color: bool) -> str:
    return f"\x1b[{code}m{text}\x1b[0m" if color else text


def _human_lines(report: Dict[str, Any], color: bool) -> List[str]:
    lines = [f"task: {report['task']}   ({report['toolVersion']})"]
    for key, value in report["verdicts"].items():
        shown = value
        if isinstance(value, bool):
            shown = _paint(str(value), "32" if value else "31", color)
        lines.append(f"  {key}: {shown}")
    tables = report.get("perPlaceTables")
    if tables:
        lines.append("  per-place:")
        for place, row in tables.items():
            cells = ", ".join(f"{k}={v}" for k, v in row.items())
            lines.append(f"    {place}: {cells}")
    lines.append(f"  input sha256: {report['inputHash'][:16]}…")
    return lines


# ---------------------------------------------------------------------------
# Command line


def _locate_token(text: str, token: Optional[str]) -> int:
    """1-based line of the first occurrence of `token` in the file."""
    if token:
        pos = text.find(token)
        if pos >= 0:
            return text.count("\n", 0, pos) + 1
    return 1


def _merge_flag_options(problem: Dict[str, Any], args) -> None:
    overrides = {
        "precisionBits": args.precision_bits,
        "exponentBound": args.exponent_bound,
        "primeBudget": args.prime_budget,
        "seed": args.seed,
    }
    extra = {k: v for k, v in overrides.items() if v is not None}
    if extra:
        options = problem.setdefault("options", {})
        if isinstance(options, dict):
            options.update(extra)


def _cmd_run(args) -> int:
    path = Path(args.file)
    try:
        text = path.read_text()
    except OSError as exc:
        print(f"{path}: {exc.strerror or exc}", file=sys.stderr)
        return 2
    try:
        problem = json.loads(text)
    except json.JSONDecodeError as exc:
        print(f"{path}:{exc.lineno}: invalid JSON: {exc.msg}", file=sys.stderr)
        return 2
    if isinstance(problem, dict):
        _merge_flag_options(problem, args)
    try:
        report = run_problem(problem, threads=args.threads)
    except ProblemError as exc:
        line = _locate_token(text, exc.token)
        print(f"{path}:{line}: {exc}", file=sys.stderr)
        return 2
    except CommensuraError as exc:
        print(f"{path}:1: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    color = _use_color(sys.stdout)
    for line in _human_lines(report, color):
        print(line)
    if args.out:
        Path(args.out).write_text(report_json(report))
        print(f"  report written to {args.out}")
    return 0


def _cmd_selftest(args) -> int:
    # imported lazily: the criteria pull in every module plus this one
    from .selfcheck import match_criteria, run_criteria

    chosen = match_criteria(args.filter)
    if not chosen:
        print(f"warning: no criteria match filter {args.filter!r}; nothing to run")
        print("0 passed, 0 failed")
        return 0
    color = _use_color(sys.stdout)
    failures = 0
    for outcome in run_criteria(selection=chosen):
        ok = outcome.passed
        failures += 0 if ok else 1
        tag = _paint("PASS", "32", color) if ok else _paint("FAIL", "31", color)
        print(f"{tag} {outcome.name} ({outcome.seconds:.2f}s): {outcome.detail}")
    total = len(chosen)
    print(f"{total - failures} passed, {failures} failed")
    return 1 if failures else 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="commensura",
        description="Exact commensurability, genericity and local-invariant reports.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="execute one JSON problem file")
    run.add_argument("file", help="path to the problem file")
    run.add_argument("--out", help="write the structured JSON report here")
    run.add_argument("--threads", type=int, default=1, help="worker threads")
    run.add_argument("--precision-bits", type=int, help="override options.precisionBits")
    run.add_argument("--exponent-bound", type=int, help="override options.exponentBound")
    run.add_argument("--prime-budget", type=int, help="override options.primeBudget")
    run.add_argument("--seed", type=int, help="override options.seed")
    run.set_defaults(handler=_cmd_run)

    selftest = sub.add_parser("selftest", help="run the bundled invariant suite")
    selftest.add_argument(
        "--filter", help="run only criteria whose name contains this substring"
    )
    selftest.set_defaults(handler=_cmd_selftest)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    return args.handler(args)


if __name__ == "__main__":
    sys.exit(main())
