"""Weak commensurability of semisimple elements.

Two infinite-order semisimple elements are weakly commensurable when the
subgroups generated by their eigenvalues intersect beyond the trivial
group.  The decision engine embeds candidate exponent vectors into an
integer lattice whose last two coordinates carry scaled certified
logarithms and turns (arguments divided by 2*pi); LLL reduction proposes
candidate relations, and every candidate is verified by an exact
algebraic product before it may enter the answer.  A "yes" therefore
always carries an exactly checked witness, while a "no" is a bounded
claim: no relation exists with exponents of absolute value at most the
bound.

Roots of unity are factored out of the lattice coordinates and handled
through their exact turns; a shared root of unity other than 1 already
settles commensurability without any lattice work.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import gcd, lcm
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import (
    DegreeTooLarge,
    DimensionMismatch,
    FiniteOrder,
    NotSemisimple,
    PrecisionExhausted,
    UnsupportedGroup,
    ValidationError,
    ZeroBase,
)
from .exactnum import (
    AlgebraicNumber,
    PolyQ,
    algebraic_product,
    algebraic_sum,
    equals_one,
    factor_over_q,
    matrix_charpoly,
    resultant,
    roots_of,
)
from .exactnum.intervals import RatInterval
from .lattice import hnf_rows, lll_reduce

Matrix = Tuple[Tuple[Fraction, ...], ...]

_MAX_PRECISION_BITS = 4096


# ---------------------------------------------------------------------------
# Rational matrix helpers


def _to_matrix(rows: Sequence[Sequence[Fraction | int | str]]) -> Matrix:
    mat = tuple(tuple(Fraction(x) for x in row) for row in rows)
    n = len(mat)
    if n == 0 or any(len(row) != n for row in mat):
        raise DimensionMismatch("matrix must be square and nonempty")
    return mat


def _identity_matrix(n: int) -> Matrix:
    return tuple(
        tuple(Fraction(1 if i == j else 0) for j in range(n)) for i in range(n)
    )


def _mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    bt = tuple(zip(*b))
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a
    )


def _mat_inv(a: Matrix) -> Matrix:
    n = len(a)
    work = [list(row) + [Fraction(1 if i == j else 0) for j in range(n)]
            for i, row in enumerate(a)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if work[r][col] != 0), None)
        if pivot is None:
            raise ValidationError("matrix is singular")
        work[col], work[pivot] = work[pivot], work[col]
        inv = 1 / work[col][col]
        work[col] = [x * inv for x in work[col]]
        for r in range(n):
            if r != col and work[r][col] != 0:
                f = work[r][col]
                work[r] = [x - f * y for x, y in zip(work[r], work[col])]
    return tuple(tuple(row[n:]) for row in work)


def _transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a))


# ---------------------------------------------------------------------------
# Group descriptors and semisimple elements


@dataclass(frozen=True)
class GroupDescriptor:
    """A split classical group: SL_n, Sp_2n, or SO of the split form."""

    kind: str
    size: int

    def __post_init__(self) -> None:
        if self.kind not in ("SL", "Sp", "SO"):
            raise UnsupportedGroup(f"unknown group kind {self.kind!r}")
        if self.size < 2:
            raise DimensionMismatch("group rank is too small")
        if self.kind == "Sp" and self.size % 2:
            raise DimensionMismatch("symplectic groups need even size")

    def form(self) -> Optional[Matrix]:
        """The invariant bilinear form (None for SL)."""
        n = self.size
        if self.kind == "Sp":
            m = n // 2
            rows = [[Fraction(0)] * n for _ in range(n)]
            for i in range(m):
                rows[i][m + i] = Fraction(1)
                rows[m + i][i] = Fraction(-1)
            return tuple(tuple(r) for r in rows)
        if self.kind == "SO":
            rows = [[Fraction(0)] * n for _ in range(n)]
            for i in range(n):
                rows[i][n - 1 - i] = Fraction(1)
            return tuple(tuple(r) for r in rows)
        return None

    def __str__(self) -> str:
        return f"{self.kind}_{self.size}"


@dataclass(frozen=True)
class SemisimpleElement:
    """A rational matrix in a split classical group.

    Shape and group membership are checked at construction; semisimplicity
    (squarefree minimal polynomial) is checked on first spectral access, so
    that the failure surfaces exactly where eigenvalues are demanded.
    """

    matrix: Matrix
    group: GroupDescriptor

    def __post_init__(self) -> None:
        if len(self.matrix) != self.group.size:
            raise DimensionMismatch(
                f"matrix size {len(self.matrix)} does not match {self.group}"
            )
        object.__setattr__(self, "matrix", _to_matrix(self.matrix))
        form = self.group.form()
        if form is not None:
            lhs = _mat_mul(_mat_mul(_transpose(self.matrix), form), self.matrix)
            if lhs != form:
                raise ValidationError(
                    f"matrix does not preserve the {self.group} form"
                )
        if self.group.kind != "Sp" and self.det != 1:
            raise ValidationError("matrix determinant is not 1")

    @classmethod
    def from_rows(
        cls, rows: Sequence[Sequence[Fraction | int | str]], kind: str = "SL"
    ) -> "SemisimpleElement":
        mat = _to_matrix(rows)
        return cls(mat, GroupDescriptor(kind, len(mat)))

    @cached_property
    def charpoly(self) -> PolyQ:
        return matrix_charpoly([list(row) for row in self.matrix])

    @property
    def det(self) -> Fraction:
        c0 = self.charpoly.coeffs[0]
        return c0 if self.group.size % 2 == 0 else -c0

    @property
    def trace(self) -> Fraction:
        return sum((row[i] for i, row in enumerate(self.matrix)), Fraction(0))

    @cached_property
    def _is_semisimple(self) -> bool:
        # The minimal polynomial is squarefree exactly when the squarefree
        # part of the characteristic polynomial annihilates the matrix.
        radical = self.charpoly.squarefree_part()
        n = self.group.size
        value: Matrix = tuple(
            tuple(Fraction(0) for _ in range(n)) for _ in range(n)
        )
        for c in reversed(radical.coeffs):
            value = _mat_mul(value, self.matrix)
            value = tuple(
                tuple(x + (c if i == j else 0) for j, x in enumerate(row))
                for i, row in enumerate(value)
            )
        return all(x == 0 for row in value for x in row)

    def ensure_semisimple(self) -> None:
        if not self._is_semisimple:
            raise NotSemisimple(
                "matrix has a repeated elementary divisor; no eigenvalue basis"
            )

    @cached_property
    def _eigenvalues(self) -> Tuple[AlgebraicNumber, ...]:
        self.ensure_semisimple()
        out: List[AlgebraicNumber] = []
        _, factors = factor_over_q(self.charpoly)
        for poly, mult in factors:
            for root in roots_of(poly):
                out.extend([root] * mult)
        return tuple(out)

    def eigenvalues(self) -> Tuple[AlgebraicNumber, ...]:
        """Eigenvalue multiset in a deterministic order.

        Raises NotSemisimple when the minimal polynomial is not squarefree.
        """
        return self._eigenvalues

    @property
    def has_infinite_order(self) -> bool:
        return any(
            ev.root_of_unity_order() is None for ev in self.eigenvalues()
        )

    def __mul__(self, other: "SemisimpleElement") -> "SemisimpleElement":
        if self.group != other.group:
            raise DimensionMismatch("cannot multiply across groups")
        return SemisimpleElement(_mat_mul(self.matrix, other.matrix), self.group)

    def inverse(self) -> "SemisimpleElement":
        return SemisimpleElement(_mat_inv(self.matrix), self.group)


# ---------------------------------------------------------------------------
# The relation-lattice engine


def _mid(iv: RatInterval) -> Fraction:
    return (iv.lo + iv.hi) / 2


def _relation_candidates(
    values: Sequence[AlgebraicNumber],
    torsion_turns: Sequence[Fraction],
    bound: int,
    bits: int,
) -> frozenset:
    """Propose integer relation candidates at one working precision.

    Each value contributes a lattice row (unit vector | K*log|v| | K*turn),
    each torsion generator a row with only a turn entry, and one extra row
    carries a full turn so that arguments are read modulo 1.  After LLL,
    rows short enough to be relations inside the exponent box survive.
    """
    k, j = len(values), len(torsion_turns)
    scale = 1 << (bits - 32)
    orders = [t.denominator for t in torsion_turns]
    width = k + j
    rows: List[List[int]] = []
    for i, v in enumerate(values):
        row = [0] * (width + 2)
        row[i] = 1
        row[width] = round(scale * _mid(v.abs_log_interval(bits)))
        row[width + 1] = round(scale * _mid(v.turn_interval(bits)))
        rows.append(row)
    for idx, t in enumerate(torsion_turns):
        row = [0] * (width + 2)
        row[k + idx] = 1
        row[width + 1] = round(scale * t)
        rows.append(row)
    full_turn = [0] * (width + 2)
    full_turn[width + 1] = scale
    rows.append(full_turn)

    mass = k * bound + sum(orders) + 1
    slack = mass // 2 + 2
    box_norm = k * bound * bound + sum(o * o for o in orders) + 2 * slack * slack
    threshold = box_norm << (len(rows) + 2)

    reduced, _ = lll_reduce(rows)
    found = set()
    for vec in reduced:
        if sum(x * x for x in vec) > threshold:
            continue
        coeffs = [int(x) for x in vec[:width]]
        if all(c == 0 for c in coeffs):
            continue
        for c in coeffs:
            if c:
                if c < 0:
                    coeffs = [-y for y in coeffs]
                break
        found.add(tuple(coeffs))
    return frozenset(found)


def _block_is_trivial(
    values: Sequence[AlgebraicNumber],
    value_exps: Sequence[int],
    turn_total: Fraction,
) -> bool:
    """Whether prod(values**exps) * e(turn_total) equals exactly 1."""
    parts = [(v, e) for v, e in zip(values, value_exps) if e]
    prod = algebraic_product(parts)
    t = turn_total % 1
    if t == 0:
        return equals_one(prod)
    order = prod.root_of_unity_order()
    if order is None:
        return False
    return (prod.exact_turn() + t) % 1 == 0


def _verify_relation(
    values: Sequence[AlgebraicNumber],
    torsion_turns: Sequence[Fraction],
    rel: Sequence[int],
) -> bool:
    k = len(values)
    turn_total = sum(
        (c * t for c, t in zip(rel[k:], torsion_turns)), Fraction(0)
    )
    return _block_is_trivial(values, rel[:k], turn_total)


def _bounded_relations(
    values: Sequence[AlgebraicNumber],
    torsion_turns: Sequence[Fraction],
    bound: int,
    precision_bits: int,
) -> Tuple[Tuple[int, ...], ...]:
    """Canonical basis for all verified relations within the exponent box.

    The working precision starts at precision_bits (at least 128) and
    doubles until the verified candidate set is unchanged across two
    consecutive doublings; past 4096 bits the search gives up.
    """
    k, j = len(values), len(torsion_turns)
    pure: List[List[int]] = []
    for idx, t in enumerate(torsion_turns):
        row = [0] * (k + j)
        row[k + idx] = t.denominator
        pure.append(row)
    if k == 0:
        return tuple(tuple(r) for r in hnf_rows(pure))

    bits = max(128, precision_bits)
    prev: Optional[Tuple[Tuple[int, ...], ...]] = None
    stable = 0
    while bits <= _MAX_PRECISION_BITS:
        candidates = _relation_candidates(values, torsion_turns, bound, bits)
        verified = [
            list(c)
            for c in sorted(candidates)
            if _verify_relation(values, torsion_turns, c)
        ]
        clean = len(verified) == len(candidates)
        rows = tuple(tuple(r) for r in hnf_rows(pure + verified))
        if clean and rows == prev:
            stable += 1
            if stable >= 2:
                for r in rows:
                    if not _verify_relation(values, torsion_turns, r):
                        raise PrecisionExhausted(
                            "canonical basis row failed exact verification"
                        )
                return rows
        else:
            stable = 0
        prev = rows if clean else None
        bits *= 2
    raise PrecisionExhausted(
        f"relation search did not stabilize below {_MAX_PRECISION_BITS} bits"
    )


def _coerce_algebraic(x) -> AlgebraicNumber:
    if isinstance(x, AlgebraicNumber):
        return x
    return AlgebraicNumber.from_rational(Fraction(x))


@dataclass(frozen=True)
class RelationLattice:
    """All multiplicative relations among the numbers, up to the bound.

    Every basis row is a verified exact relation: the product of the
    numbers raised to the row is exactly 1.  The basis is in Hermite
    normal form, so equal lattices have equal bases.
    """

    numbers: Tuple[AlgebraicNumber, ...]
    bound: int
    basis: Tuple[Tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return len(self.basis)


def relation_lattice(
    nums: Sequence, bound: int = 20, precision_bits: int = 128
) -> RelationLattice:
    """Lattice of exponent vectors a with prod(nums[i]**a[i]) == 1.

    The numbers must be nonzero and must not be roots of unity (torsion
    belongs to the turn bookkeeping, not to the free part).  Complete for
    exponent vectors with max|a_i| <= bound; raises PrecisionExhausted if
    the certified search cannot stabilize.
    """
    values = [_coerce_algebraic(x) for x in nums]
    for v in values:
        if v.is_zero:
            raise ZeroBase("relation lattices are defined for nonzero numbers")
        if v.root_of_unity_order() is not None:
            raise FiniteOrder(
                "roots of unity must be factored out before the lattice search"
            )
    basis = _bounded_relations(values, [], bound, precision_bits)
    return RelationLattice(tuple(values), bound, basis)


# ---------------------------------------------------------------------------
# Eigenvalue bookkeeping for one side of a comparison


@dataclass(frozen=True)
class _Side:
    eigs: Tuple[AlgebraicNumber, ...]
    boundaries: Tuple[int, ...]
    values: Tuple[AlgebraicNumber, ...]
    value_pos: Tuple[int, ...]
    torsion_pos: Tuple[int, ...]
    torsion_turns: Tuple[Fraction, ...]
    order: int
    reach: Dict[Fraction, Tuple[int, ...]] = field(compare=False)


def _turn_reach(turns: Sequence[Fraction]) -> Dict[Fraction, Tuple[int, ...]]:
    """Nonnegative exponent paths to every element of the turn subgroup."""
    zero = Fraction(0)
    reach: Dict[Fraction, Tuple[int, ...]] = {zero: (0,) * len(turns)}
    frontier = [zero]
    while frontier:
        nxt: List[Fraction] = []
        for base in frontier:
            path = reach[base]
            for i, t in enumerate(turns):
                s = (base + t) % 1
                if s not in reach:
                    stepped = list(path)
                    stepped[i] += 1
                    reach[s] = tuple(stepped)
                    nxt.append(s)
        frontier = nxt
    return reach


def _analyze(eig_lists: Sequence[Sequence[AlgebraicNumber]]) -> _Side:
    eigs: List[AlgebraicNumber] = []
    boundaries: List[int] = []
    for lst in eig_lists:
        eigs.extend(lst)
        boundaries.append(len(lst))
    values: List[AlgebraicNumber] = []
    value_pos: List[int] = []
    torsion_pos: List[int] = []
    torsion_turns: List[Fraction] = []
    for pos, ev in enumerate(eigs):
        order = ev.root_of_unity_order()
        if order is None:
            if all(ev != v for v in values):
                values.append(ev)
                value_pos.append(pos)
        elif order > 1:
            torsion_pos.append(pos)
            torsion_turns.append(ev.exact_turn() % 1)
    subgroup_order = lcm(*(t.denominator for t in torsion_turns)) if torsion_turns else 1
    reach = _turn_reach(torsion_turns)
    return _Side(
        tuple(eigs),
        tuple(boundaries),
        tuple(values),
        tuple(value_pos),
        tuple(torsion_pos),
        tuple(torsion_turns),
        subgroup_order,
        reach,
    )


def _expand_exponents(
    side: _Side, value_exps: Sequence[int], gen_exp: int
) -> Tuple[int, ...]:
    """Exponents over the side's full eigenvalue list."""
    exps = [0] * len(side.eigs)
    for coord, e in enumerate(value_exps):
        if e:
            exps[side.value_pos[coord]] += e
    if gen_exp:
        path = side.reach[Fraction(1, side.order) % 1]
        for pos, mult in zip(side.torsion_pos, path):
            exps[pos] += mult * gen_exp
    return tuple(exps)


def _side_product(side: _Side, exps: Sequence[int]) -> AlgebraicNumber:
    return algebraic_product(
        [(side.eigs[i], e) for i, e in enumerate(exps) if e]
    )


def _split_per_element(
    side: _Side, exps: Sequence[int]
) -> Tuple[Tuple[int, ...], ...]:
    out: List[Tuple[int, ...]] = []
    start = 0
    for length in side.boundaries:
        out.append(tuple(exps[start : start + length]))
        start += length
    return tuple(out)


def _least_prime_factor(n: int) -> int:
    d = 2
    while d * d <= n:
        if n % d == 0:
            return d
        d += 1
    return n


def _joint_witness(
    side1: _Side, side2: _Side, bound: int, precision_bits: int
) -> Optional[Tuple[Tuple[int, ...], Tuple[int, ...], AlgebraicNumber]]:
    """A common nontrivial eigenvalue product of the two sides, if any.

    Tries the torsion shortcut first: a shared root of unity other than 1
    exists exactly when the torsion subgroup orders share a prime.  The
    lattice route then looks for a basis relation whose first block has a
    value other than 1; because block values are homomorphisms on the
    relation lattice, checking basis rows decides every relation in the
    box.
    """
    g = gcd(side1.order, side2.order)
    if g > 1:
        p = _least_prime_factor(g)
        target = Fraction(1, p)
        exps1 = _expand_from_torsion(side1, target)
        exps2 = _expand_from_torsion(side2, target)
        return exps1, exps2, _side_product(side1, exps1)

    values = list(side1.values) + list(side2.values)
    turns: List[Fraction] = []
    if side1.order > 1:
        turns.append(Fraction(1, side1.order))
    if side2.order > 1:
        turns.append(Fraction(1, side2.order))
    rows = _bounded_relations(values, turns, bound, precision_bits)
    k1, k2 = len(side1.values), len(side2.values)
    j1 = 1 if side1.order > 1 else 0
    for row in rows:
        a1 = row[:k1]
        a2 = row[k1 : k1 + k2]
        c1 = row[k1 + k2] if j1 else 0
        c2 = row[k1 + k2 + j1] if side2.order > 1 else 0
        turn1 = Fraction(c1, side1.order) if c1 else Fraction(0)
        if _block_is_trivial(side1.values, a1, turn1):
            continue
        exps1 = _expand_exponents(side1, a1, c1)
        exps2 = tuple(-e for e in _expand_exponents(side2, a2, c2))
        return exps1, exps2, _side_product(side1, exps1)
    return None


def _expand_from_torsion(side: _Side, target: Fraction) -> Tuple[int, ...]:
    exps = [0] * len(side.eigs)
    path = side.reach[target % 1]
    for pos, mult in zip(side.torsion_pos, path):
        exps[pos] += mult
    return tuple(exps)


# ---------------------------------------------------------------------------
# Public verdicts


@dataclass(frozen=True)
class CommensurabilityVerdict:
    """Either an exact Yes witness or a bounded No.

    For a Yes, witness holds one exponent vector per element (indexed by
    the eigenvalue lists) and common_value is the shared product, always
    different from 1.  For a No, no nontrivial common product exists with
    exponents bounded by `bound` in absolute value.
    """

    kind: str
    bound: int
    witness: Optional[Tuple[Tuple[int, ...], Tuple[int, ...]]] = None
    common_value: Optional[AlgebraicNumber] = None

    @property
    def is_yes(self) -> bool:
        return self.kind == "yes"


def _require_infinite(side: _Side, label: str) -> None:
    if not side.values:
        raise FiniteOrder(f"{label} element has finite order")


def weakly_commensurable(
    g1: SemisimpleElement,
    g2: SemisimpleElement,
    bound: int = 20,
    precision_bits: int = 128,
) -> CommensurabilityVerdict:
    """Decide weak commensurability of two infinite-order elements.

    Yes means some product of eigenvalue powers of g1 equals a product of
    eigenvalue powers of g2 and differs from 1; the witness is re-verified
    exactly before it is returned.  No is complete for exponents within
    the bound.
    """
    side1 = _analyze([g1.eigenvalues()])
    side2 = _analyze([g2.eigenvalues()])
    _require_infinite(side1, "first")
    _require_infinite(side2, "second")
    hit = _joint_witness(side1, side2, bound, precision_bits)
    if hit is None:
        return CommensurabilityVerdict("no_up_to_bound", bound)
    exps1, exps2, value = hit
    p1 = _side_product(side1, exps1)
    p2 = _side_product(side2, exps2)
    if p1 != p2 or equals_one(p1):
        raise PrecisionExhausted("witness failed exact re-verification")
    return CommensurabilityVerdict("yes", bound, (exps1, exps2), value)


@dataclass(frozen=True)
class SampleComparison:
    """Pairwise verdicts between two samples plus the aggregate flags.

    Finite-order elements take no part in weak commensurability and are
    recorded in the skipped tuples.  forward says every infinite-order
    element of the first sample matched something; backward is the mirror.
    """

    verdicts: Tuple[Tuple[int, int, CommensurabilityVerdict], ...]
    skipped_first: Tuple[int, ...]
    skipped_second: Tuple[int, ...]
    forward: bool
    backward: bool

    @property
    def aggregate(self) -> bool:
        return self.forward and self.backward


def weakly_commensurable_samples(
    sample1: Sequence[SemisimpleElement],
    sample2: Sequence[SemisimpleElement],
    bound: int = 20,
    precision_bits: int = 128,
) -> SampleComparison:
    infinite1 = [i for i, g in enumerate(sample1) if g.has_infinite_order]
    infinite2 = [i for i, g in enumerate(sample2) if g.has_infinite_order]
    verdicts: List[Tuple[int, int, CommensurabilityVerdict]] = []
    table: Dict[Tuple[int, int], CommensurabilityVerdict] = {}
    for i in infinite1:
        for j in infinite2:
            v = weakly_commensurable(
                sample1[i], sample2[j], bound, precision_bits
            )
            verdicts.append((i, j, v))
            table[(i, j)] = v
    forward = all(
        any(table[(i, j)].is_yes for j in infinite2) for i in infinite1
    )
    backward = all(
        any(table[(i, j)].is_yes for i in infinite1) for j in infinite2
    )
    return SampleComparison(
        tuple(verdicts),
        tuple(i for i in range(len(sample1)) if i not in infinite1),
        tuple(j for j in range(len(sample2)) if j not in infinite2),
        forward,
        backward,
    )


@dataclass(frozen=True)
class IndependenceResult:
    independent: bool
    certificate: Optional[Tuple[Tuple[int, ...], ...]] = None

    def __bool__(self) -> bool:
        return self.independent


def multiplicatively_independent(
    gs: Sequence[SemisimpleElement],
    bound: int = 20,
    precision_bits: int = 128,
) -> IndependenceResult:
    """Whether no bounded relation mixes the elements nontrivially.

    Independent means every relation among all the eigenvalues has value 1
    on each element's block.  A certificate of dependence is a verified
    relation, split into per-element exponent vectors, in which some block
    has a product other than 1.
    """
    sides = [_analyze([g.eigenvalues()]) for g in gs]
    for s in sides:
        _require_infinite(s, "every")
    values: List[AlgebraicNumber] = []
    turns: List[Fraction] = []
    spans: List[Tuple[int, int, bool]] = []  # (value offset, count, has gen)
    for s in sides:
        spans.append((len(values), len(s.values), s.order > 1))
        values.extend(s.values)
    gen_offset = len(values)
    gen_index: List[Optional[int]] = []
    for s in sides:
        if s.order > 1:
            gen_index.append(gen_offset + len(turns))
            turns.append(Fraction(1, s.order))
        else:
            gen_index.append(None)
    rows = _bounded_relations(values, turns, bound, precision_bits)
    for row in rows:
        blocks: List[Tuple[int, ...]] = []
        nontrivial = False
        for s, (off, count, _has_gen), gi in zip(sides, spans, gen_index):
            a = row[off : off + count]
            c = row[gi] if gi is not None else 0
            turn = Fraction(c, s.order) if c else Fraction(0)
            if not _block_is_trivial(s.values, a, turn):
                nontrivial = True
            blocks.append(_expand_exponents(s, a, c))
        if nontrivial:
            return IndependenceResult(False, tuple(blocks))
    return IndependenceResult(True, None)


@dataclass(frozen=True)
class ContainmentResult:
    contained: bool
    witness: Optional[
        Tuple[Tuple[Tuple[int, ...], ...], Tuple[Tuple[int, ...], ...]]
    ] = None
    common_value: Optional[AlgebraicNumber] = None

    def __bool__(self) -> bool:
        return self.contained


def weakly_contained(
    gs: Sequence[SemisimpleElement],
    sample2: Sequence[SemisimpleElement],
    bound: int = 20,
    precision_bits: int = 128,
) -> ContainmentResult:
    """Whether the gs share a nontrivial eigenvalue product with sample2.

    True when some product of eigenvalue powers over the gs equals a
    product of eigenvalue powers over sample2 and differs from 1, with all
    exponents within the bound.  The witness is split per element.
    """
    for g in gs:
        if not g.has_infinite_order:
            raise FiniteOrder("containment is defined for infinite-order elements")
    side1 = _analyze([g.eigenvalues() for g in gs])
    side2 = _analyze([h.eigenvalues() for h in sample2])
    hit = _joint_witness(side1, side2, bound, precision_bits)
    if hit is None:
        return ContainmentResult(False)
    exps1, exps2, value = hit
    p1 = _side_product(side1, exps1)
    p2 = _side_product(side2, exps2)
    if p1 != p2 or equals_one(p1):
        raise PrecisionExhausted("witness failed exact re-verification")
    return ContainmentResult(
        True,
        (_split_per_element(side1, exps1), _split_per_element(side2, exps2)),
        value,
    )


# ---------------------------------------------------------------------------
# Adjoint traces and the field they generate


def _lie_basis(group: GroupDescriptor) -> List[Matrix]:
    n = group.size

    def unit(i: int, j: int, v: Fraction = Fraction(1)) -> List[List[Fraction]]:
        rows = [[Fraction(0)] * n for _ in range(n)]
        rows[i][j] = v
        return rows

    def freeze(rows: List[List[Fraction]]) -> Matrix:
        return tuple(tuple(r) for r in rows)

    def add(target: List[List[Fraction]], i: int, j: int, v: int) -> None:
        target[i][j] += v

    basis: List[Matrix] = []
    if group.kind == "SL":
        for i in range(n):
            for j in range(n):
                if i != j:
                    basis.append(freeze(unit(i, j)))
        for k in range(n - 1):
            rows = unit(k, k)
            add(rows, k + 1, k + 1, -1)
            basis.append(freeze(rows))
    elif group.kind == "Sp":
        m = n // 2
        for i in range(m):
            for j in range(m):
                rows = unit(i, j)
                add(rows, m + j, m + i, -1)
                basis.append(freeze(rows))
        for i in range(m):
            for j in range(i, m):
                rows = unit(i, m + j)
                if i != j:
                    add(rows, j, m + i, 1)
                basis.append(freeze(rows))
        for i in range(m):
            for j in range(i, m):
                rows = unit(m + i, j)
                if i != j:
                    add(rows, m + j, i, 1)
                basis.append(freeze(rows))
    else:  # SO of the split form: Q X antisymmetric
        for i in range(n):
            for j in range(i + 1, n):
                rows = unit(n - 1 - i, j)
                add(rows, n - 1 - j, i, -1)
                basis.append(freeze(rows))
    return basis


def _lie_coords(group: GroupDescriptor, mat: Matrix) -> List[Fraction]:
    """Coordinates of mat in the order produced by _lie_basis.

    Raises ValidationError if mat is not in the Lie algebra; conjugation
    by a group element always is, so this is a pure safety net.
    """
    n = group.size
    coords: List[Fraction] = []
    if group.kind == "SL":
        if sum(mat[i][i] for i in range(n)) != 0:
            raise ValidationError("conjugated matrix is not trace-free")
        for i in range(n):
            for j in range(n):
                if i != j:
                    coords.append(mat[i][j])
        prefix = Fraction(0)
        for k in range(n - 1):
            prefix += mat[k][k]
            coords.append(prefix)
    elif group.kind == "Sp":
        m = n // 2
        for i in range(m):
            for j in range(m):
                if mat[i][j] != -mat[m + j][m + i]:
                    raise ValidationError("matrix is outside the symplectic algebra")
                coords.append(mat[i][j])
        for i in range(m):
            for j in range(i, m):
                if mat[i][m + j] != mat[j][m + i]:
                    raise ValidationError("matrix is outside the symplectic algebra")
                coords.append(mat[i][m + j])
        for i in range(m):
            for j in range(i, m):
                if mat[m + i][j] != mat[m + j][i]:
                    raise ValidationError("matrix is outside the symplectic algebra")
                coords.append(mat[m + i][j])
    else:
        for i in range(n):
            for j in range(i + 1, n):
                if mat[n - 1 - i][j] != -mat[n - 1 - j][i]:
                    raise ValidationError("matrix is outside the orthogonal algebra")
                coords.append(mat[n - 1 - i][j])
    return coords


def _trace_ad_matrix(mat: Matrix, group: GroupDescriptor) -> Fraction:
    basis = _lie_basis(group)
    inv = _mat_inv(mat)
    total = Fraction(0)
    for idx, b in enumerate(basis):
        image = _mat_mul(_mat_mul(mat, b), inv)
        total += _lie_coords(group, image)[idx]
    return total


def trace_ad(g: SemisimpleElement) -> Fraction:
    """Trace of conjugation by g on the group's Lie algebra.

    Computed by conjugating each basis element and reading off its own
    coordinate; for SL_2 this works out to tr(g)^2 - 1.
    """
    return _trace_ad_matrix(g.matrix, g.group)


@dataclass(frozen=True)
class FieldDescriptor:
    """A number field, presented by the minimal polynomial of a primitive
    element (the polynomial t for the rationals)."""

    minpoly: PolyQ

    @property
    def degree(self) -> int:
        return self.minpoly.degree

    @property
    def is_rational(self) -> bool:
        return self.minpoly.degree == 1


def _shifted_difference(g: PolyQ, t0: Fraction) -> PolyQ:
    """g(t0 - x) as a polynomial in x."""
    lin = PolyQ.from_coeffs([t0, Fraction(-1)])
    out = PolyQ.from_coeffs([])
    for c in reversed(g.coeffs):
        out = out * lin + PolyQ.constant(c)
    return out


def _sum_resultant(f: PolyQ, g: PolyQ) -> PolyQ:
    """Res_x(f(x), g(t - x)) by interpolation; vanishes at sums of roots."""
    from .exactnum.polyq import interpolate

    n, m = f.degree, g.degree
    samples: List[Tuple[Fraction, Fraction]] = []
    t = Fraction(0)
    while len(samples) < n * m + 1:
        samples.append((t, resultant(f, _shifted_difference(g, t))))
        t += 1
    return interpolate(samples)


def _adjoin_value(theta: AlgebraicNumber, value: AlgebraicNumber) -> AlgebraicNumber:
    """A primitive element for the field generated by theta and value."""
    if value.is_rational:
        return theta
    if theta.is_rational:
        return value
    for c in range(1, 64):
        scaled = algebraic_product(
            [(value, 1), (AlgebraicNumber.from_rational(Fraction(c)), 1)]
        )
        if _sum_resultant(theta.minpoly, scaled.minpoly).is_squarefree():
            return algebraic_sum(theta, scaled)
    raise DegreeTooLarge("no squarefree primitive-element shift found")


def trace_field(
    sample: Sequence[SemisimpleElement], word_budget: int = 2
) -> FieldDescriptor:
    """Field generated by adjoint traces of words in the sample.

    Walks every product of at most word_budget sample elements, collects
    the adjoint traces, and adjoins them one at a time through primitive
    elements found by resultants.  Rational matrices give rational adjoint
    traces, so the result is the rational field unless the traces are
    genuinely irrational.
    """
    if not sample:
        raise ValidationError("sample must be nonempty")
    group = sample[0].group
    if any(g.group != group for g in sample):
        raise DimensionMismatch("sample elements live in different groups")
    words = {_identity_matrix(group.size)}
    frontier = set(words)
    for _ in range(word_budget):
        frontier = {
            _mat_mul(w, g.matrix) for w in frontier for g in sample
        } - words
        if not frontier:
            break
        words |= frontier
    traces = sorted({_trace_ad_matrix(w, group) for w in words})
    theta = AlgebraicNumber.from_rational(0)
    for t in traces:
        theta = _adjoin_value(theta, _coerce_algebraic(t))
    if theta.is_rational:
        return FieldDescriptor(PolyQ.x())
    return FieldDescriptor(theta.minpoly)
