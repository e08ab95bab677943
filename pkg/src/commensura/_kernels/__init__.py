"""Kernel backend selection.

The compiled extension is preferred when it imported cleanly; setting
COMMENSURA_PURE=1 in the environment forces the pure-Python kernels.
Both backends implement the same functions with identical outputs, so
everything downstream is backend-agnostic.
"""

from __future__ import annotations

import os

from . import pure

_impl = pure
if not os.environ.get("COMMENSURA_PURE"):
    try:
        from . import _speedups as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = pure

BACKEND_NAME: str = _impl.BACKEND_NAME

poly_trim = pure.poly_trim
poly_mul = _impl.poly_mul
poly_rem = _impl.poly_rem
poly_gcd = _impl.poly_gcd
poly_powmod = _impl.poly_powmod


def closure_order(gens, dim: int, p: int, limit: int) -> int:
    if _impl is not pure and p >= 256:
        return pure.closure_order(gens, dim, p, limit)
    return _impl.closure_order(gens, dim, p, limit)


def available_backends() -> dict[str, object]:
    """Importable kernel modules keyed by name, for benchmarks and tests."""
    out: dict[str, object] = {"pure": pure}
    try:
        from . import _speedups

        out["compiled"] = _speedups
    except ImportError:
        pass
    return out
