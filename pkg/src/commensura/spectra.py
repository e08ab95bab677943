"""Geodesic-length data from eigenvalues.

A hyperbolic matrix in SL_2 closes a geodesic whose length is
(2/n) * log t for the eigenvalue t > 1 of g or -g and a winding
divisor n >= 1.  The higher-rank invariant lambda sums
(log |alpha(g)|)^2 over all roots of the ambient group; on a split
torus the root values are coordinate pairings of the eigenvalue logs,
so lambda^2 is an exact integer quadratic form evaluated on certified
log enclosures.  Rationality of a length ratio is equivalent to a
multiplicative relation t1^m = t2^n, which is located numerically and
then proved or refuted exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .errors import (
    DimensionMismatch,
    NotHyperbolic,
    UnsupportedGroup,
    ValidationError,
    ZeroVector,
)
from .exactnum import AlgebraicNumber, algebraic_product, equals_one
from .exactnum.intervals import RatInterval
from .rootsys import RootSystemType, gram_matrix, quadratic_sum, roots
from .weakcomm import GroupDescriptor, SemisimpleElement

ElementLike = Union[SemisimpleElement, Sequence[Sequence[Union[Fraction, int, str]]]]

_SL2 = GroupDescriptor("SL", 2)


def _as_algebraic(x: Union[AlgebraicNumber, Fraction, int, str]) -> AlgebraicNumber:
    if isinstance(x, AlgebraicNumber):
        return x
    return AlgebraicNumber.from_rational(Fraction(x))


def _certified_positive_log(t: AlgebraicNumber) -> RatInterval:
    """An enclosure of log|t| certified to be positive; |t| must exceed 1."""
    for bits in (16, 64, 256, 1024):
        iv = t.abs_log_interval(bits)
        if iv.lo > 0:
            return iv
        if iv.hi < 0 or iv.width == 0:
            break
    raise ValidationError(f"cannot certify |t| > 1 for {t}")


@dataclass(frozen=True)
class GeodesicLength:
    """The eigenvalue t > 1 of a hyperbolic element plus a length enclosure.

    `numeric` encloses (2 / winding_divisor) * log t.  The winding
    divisor defaults to 1 because primitivity of the underlying group
    element is not decidable from the matrix alone; callers who know
    the geodesic wraps n times can rescale with `with_winding`.
    """

    t: AlgebraicNumber
    numeric: RatInterval
    winding_divisor: int = 1

    def __post_init__(self) -> None:
        if self.winding_divisor < 1:
            raise ValidationError("winding divisor must be a positive integer")
        log_iv = _certified_positive_log(self.t)
        if not self.numeric.intersects(log_iv.scale(Fraction(2, self.winding_divisor))):
            raise ValidationError("length interval is inconsistent with t")

    def with_winding(self, n: int) -> "GeodesicLength":
        return GeodesicLength(
            self.t, self.numeric.scale(Fraction(self.winding_divisor, n)), n
        )


def _negated(el: SemisimpleElement) -> SemisimpleElement:
    rows = tuple(tuple(-x for x in row) for row in el.matrix)
    return SemisimpleElement(rows, el.group)


def _coerce_sl2(g: ElementLike) -> SemisimpleElement:
    el = g if isinstance(g, SemisimpleElement) else SemisimpleElement.from_rows(g)
    if el.group != _SL2:
        raise UnsupportedGroup(f"hyperbolic lengths live on SL_2, not {el.group}")
    return el


def hyperbolic_length(g: ElementLike, bits: int = 64) -> GeodesicLength:
    """Length 2*log t of the geodesic closed by a hyperbolic SL_2 matrix.

    The sign of g is irrelevant: t is the eigenvalue exceeding 1 of
    whichever of g, -g has positive trace.
    """
    el = _coerce_sl2(g)
    tr = el.trace
    if abs(tr) <= 2:
        raise NotHyperbolic(f"trace {tr} does not exceed 2 in absolute value")
    base = el if tr > 0 else _negated(el)
    t: Optional[AlgebraicNumber] = None
    for ev in base.eigenvalues():
        if ev.abs_log_interval(16).lo > 0:
            t = ev
            break
    assert t is not None, "a hyperbolic element has an eigenvalue beyond the unit circle"
    return GeodesicLength(t, t.abs_log_interval(bits).scale(2))


# ---------------------------------------------------------------------------
# The lambda invariant on split tori


@dataclass(frozen=True)
class SplitTorusElement:
    """Split-torus coordinates: one exact eigenvalue per coordinate axis.

    Family A stores all rank+1 eigenvalues (product 1); families B/C/D
    store one representative per inverse-pair {v, 1/v}, the rest of the
    eigenvalue multiset being implied by closure under inversion.
    """

    root_system: RootSystemType
    eigenvalues: Tuple[AlgebraicNumber, ...]

    def __post_init__(self) -> None:
        eigs = tuple(_as_algebraic(v) for v in self.eigenvalues)
        object.__setattr__(self, "eigenvalues", eigs)
        if len(eigs) != self.root_system.ambient_dimension:
            raise DimensionMismatch(
                f"{self.root_system} needs {self.root_system.ambient_dimension} "
                f"eigenvalues, got {len(eigs)}"
            )
        if any(v.is_zero for v in eigs):
            raise ValidationError("torus eigenvalues must be nonzero")
        if self.root_system.family == "A":
            if not equals_one(algebraic_product([(v, 1) for v in eigs])):
                raise ValidationError("family A eigenvalues must have product 1")

    def log_coords(self, bits: int) -> Tuple[RatInterval, ...]:
        return tuple(v.abs_log_interval(bits) for v in self.eigenvalues)


@dataclass(frozen=True)
class LambdaSquare:
    """lambda^2 = sum over roots of <alpha, log-coords>^2.

    `gram` is the exact integer matrix of that quadratic form, so the
    enclosure can be re-derived (or sharpened) from the eigenvalues at
    any precision; `squared` is the certified enclosure actually
    computed.
    """

    element: SplitTorusElement
    gram: Tuple[Tuple[int, ...], ...]
    squared: RatInterval


def lambda_gamma(e: SplitTorusElement, bits: int = 64) -> LambdaSquare:
    """Certified enclosure of lambda^2 for a split-torus element.

    Summing the squared pairings root by root keeps every term
    nonnegative, which is tighter than evaluating the Gram form with
    interval entries of mixed sign.
    """
    coords = e.log_coords(bits)
    total = RatInterval.point(0)
    for alpha in roots(e.root_system):
        pairing = RatInterval.point(0)
        for a, iv in zip(alpha, coords):
            pairing = pairing + iv.scale(a)
        total = total + pairing.square()
    return LambdaSquare(e, gram_matrix(e.root_system), total)


# ---------------------------------------------------------------------------
# Word-ball spectra


@dataclass(frozen=True)
class SpectrumSample:
    """Hyperbolic words of a word-ball, deduplicated by exact eigenvalue.

    Words are tuples of nonzero letters: letter +i is generator i-1,
    letter -i its inverse.  Sharing a t merges words even when the
    underlying conjugacy classes differ, so entry counts are a lower
    bound on distinct geodesics.
    """

    entries: Tuple[Tuple[Tuple[int, ...], GeodesicLength], ...]
    generator_set: Tuple[SemisimpleElement, ...]

    @property
    def lengths(self) -> Tuple[GeodesicLength, ...]:
        return tuple(length for _, length in self.entries)


def rational_length_spectrum(
    generators: Sequence[ElementLike], word_length: int, bits: int = 64
) -> SpectrumSample:
    """Geodesic lengths of all reduced words up to the given length.

    Only freely reduced words are walked (no group relations are
    solved), non-hyperbolic words are dropped, and first-found word
    order (by length, then letters) breaks ties among words sharing an
    eigenvalue.
    """
    if word_length < 0:
        raise ValidationError("word length must be nonnegative")
    gens = [_coerce_sl2(g) for g in generators]
    if not gens:
        raise ValidationError("need at least one generator")
    letters: List[Tuple[int, SemisimpleElement]] = []
    for i, g in enumerate(gens):
        letters.append((i + 1, g))
        letters.append((-(i + 1), g.inverse()))
    seen: Dict[AlgebraicNumber, Tuple[int, ...]] = {}
    found: List[Tuple[Tuple[int, ...], GeodesicLength]] = []

    def walk(word: Tuple[int, ...], product: SemisimpleElement) -> None:
        if word and abs(product.trace) > 2:
            length = hyperbolic_length(product, bits)
            if length.t not in seen:
                seen[length.t] = word
                found.append((word, length))
        if len(word) == word_length:
            return
        for letter, mat in letters:
            if word and letter == -word[-1]:
                continue
            walk(word + (letter,), product * mat)

    identity = SemisimpleElement.from_rows([[1, 0], [0, 1]])
    walk((), identity)
    return SpectrumSample(tuple(found), tuple(gens))


# ---------------------------------------------------------------------------
# Ratio rationality


@dataclass(frozen=True)
class RatioVerdict:
    """Either t1^m = t2^n with minimal (m, n), or no relation up to the bound."""

    kind: str
    bound: int
    m: Optional[int] = None
    n: Optional[int] = None

    @property
    def is_rational(self) -> bool:
        return self.kind == "Rational"


def ratio_rational(
    l1: GeodesicLength, l2: GeodesicLength, bound: int = 20
) -> RatioVerdict:
    """Decide whether log t1 / log t2 is rational, up to an exponent bound.

    The certified log ratio pins at most one candidate n for each m up
    to the bound; each candidate is then settled by an exact power
    comparison, so a Rational verdict is a proof and NoUpToBound is an
    exhaustive search result rather than a numerical guess.
    """
    if bound < 1:
        raise ValidationError("exponent bound must be positive")
    log1 = _certified_positive_log(l1.t)
    log2 = _certified_positive_log(l2.t)
    ratio = log1 / log2
    if ratio.width * bound >= 1:
        log1 = l1.t.abs_log_interval(128)
        log2 = l2.t.abs_log_interval(128)
        ratio = log1 / log2
    powers1: Dict[int, AlgebraicNumber] = {}
    powers2: Dict[int, AlgebraicNumber] = {}
    for m in range(1, bound + 1):
        scaled = ratio.scale(m)
        n_lo = max(1, math.ceil(scaled.lo))
        n_hi = min(bound, math.floor(scaled.hi))
        for n in range(n_lo, n_hi + 1):
            if m not in powers1:
                powers1[m] = algebraic_product([(l1.t, m)])
            if n not in powers2:
                powers2[n] = algebraic_product([(l2.t, n)])
            if powers1[m] == powers2[n]:
                return RatioVerdict("Rational", bound, m, n)
    return RatioVerdict("NoUpToBound", bound)


@dataclass(frozen=True)
class SampleRatios:
    """Pairwise ratio verdicts between two spectrum samples."""

    verdicts: Tuple[Tuple[RatioVerdict, ...], ...]
    aggregate: bool


def length_commensurable_samples(
    s1: SpectrumSample, s2: SpectrumSample, bound: int = 20
) -> SampleRatios:
    """Pairwise rationality table; aggregate truth needs a partner for everyone.

    The aggregate flag is the sampled analogue of the two rational
    length sets spanning the same line: every entry of each sample must
    have a rational-ratio partner in the other sample.
    """
    if not s1.entries or not s2.entries:
        raise ValidationError("both samples must be nonempty")
    table = tuple(
        tuple(ratio_rational(a, b, bound) for _, b in s2.entries)
        for _, a in s1.entries
    )
    rows_ok = all(any(v.is_rational for v in row) for row in table)
    cols_ok = all(any(row[j].is_rational for row in table) for j in range(len(s2.entries)))
    return SampleRatios(table, rows_ok and cols_ok)


# ---------------------------------------------------------------------------
# The B/C scaling ratio


def bc_scaling_check(n: int, x: Sequence[Union[Fraction, int]]) -> Fraction:
    """Exact ratio of the C_n and B_n quadratic sums on one log vector.

    Both sums are multiples of |x|^2, so the ratio is independent of x;
    it is returned after being recomputed from both sums and checked
    against (2n+2)/(2n-1).
    """
    bn = RootSystemType("B", n)
    cn = RootSystemType("C", n)
    vec = [Fraction(c) for c in x]
    if len(vec) != n:
        raise DimensionMismatch(f"rank {n} needs a vector of length {n}, got {len(vec)}")
    if all(c == 0 for c in vec):
        raise ZeroVector("the scaling ratio needs a nonzero log vector")
    ratio = quadratic_sum(cn, vec) / quadratic_sum(bn, vec)
    assert ratio == Fraction(2 * n + 2, 2 * n - 1)
    return ratio
