"""Genericity certificates from mod-p factorization patterns.

The splitting field of the characteristic polynomial of a regular
semisimple element carries a Galois action on eigenvalues, and the
element is generic exactly when that action realizes the full Weyl
group.  Reduction modulo an unramified prime exposes one Galois element
up to conjugacy — its cycle type on eigenvalues is readable off the
degrees (and self-reciprocity) of the mod-p factors — so witnessing
every conjugacy class of W among sampled primes certifies genericity:
a proper subgroup of a finite group always misses some class.

The certificates are one-sided by design.  `Certified` is a proof;
`Undetermined` only means the prime budget ran out, since missing
witnesses prove nothing at any finite budget.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import FrozenSet, List, Optional, Sequence, Set, Tuple, Union

from .errors import (
    BadPrime,
    BudgetExhausted,
    DimensionMismatch,
    HypothesisViolated,
    NotGeneric,
    NotPalindromic,
    NotSemisimple,
    NotSquarefree,
    RamifiedPrime,
    UnsupportedFamily,
    UnsupportedGroup,
    ValidationError,
)
from .exactnum import PolyQ, factor_mod_p
from .exactnum.modp import is_prime, primes_up_to
from ._kernels import closure_order
from .rootsys import RootSystemType, WeylClassDescriptor, conjugacy_classes
from .weakcomm import GroupDescriptor, SemisimpleElement

ElementLike = Union[SemisimpleElement, Sequence[Sequence[Union[Fraction, int, str]]]]

CERTIFIED = "Certified"
UNDETERMINED = "Undetermined"
NOT_REGULAR = "NotRegular"
FINITE_ORDER = "FiniteOrder"


@dataclass(frozen=True)
class FrobeniusEvidence:
    """One witnessed Weyl class: the pattern seen at one unramified prime."""

    prime: int
    pattern: WeylClassDescriptor


@dataclass(frozen=True)
class GenericityCertificate:
    status: str
    witnessed: FrozenSet[WeylClassDescriptor]
    primes_used: Tuple[int, ...]

    @property
    def is_certified(self) -> bool:
        return self.status == CERTIFIED


@dataclass(frozen=True)
class CongruenceSieve:
    """Primes paired with target classes, one per nontrivial class of W."""

    constraints: Tuple[Tuple[int, WeylClassDescriptor], ...]

    def __post_init__(self) -> None:
        primes = [p for p, _ in self.constraints]
        if len(set(primes)) != len(primes):
            raise ValidationError("sieve primes must be distinct")
        if any(cls.is_identity for _, cls in self.constraints):
            raise ValidationError("the identity class needs no constraint")

    @property
    def primes(self) -> Tuple[int, ...]:
        return tuple(p for p, _ in self.constraints)


# ---------------------------------------------------------------------------
# Frobenius patterns


def _reciprocal_mod_p(h: Tuple[int, ...], p: int) -> Tuple[int, ...]:
    """Monic reverse of h mod p; h must have a nonzero constant term."""
    rev = tuple(reversed(h))
    inv = pow(rev[-1], -1, p)
    return tuple(c * inv % p for c in rev)


def _palindromic_part(charpoly: PolyQ, family: str) -> PolyQ:
    """The even-degree palindromic factor whose roots come in inverse pairs.

    Family B carries a forced eigenvalue 1 that is pure bookkeeping; it is
    divided out before any pattern is read.
    """
    if family == "B":
        if charpoly(Fraction(1)) != 0:
            raise NotPalindromic("family B needs the forced eigenvalue 1")
        work = charpoly // PolyQ.from_coeffs([-1, 1])
    else:
        work = charpoly
    if not work.is_palindromic():
        raise NotPalindromic(
            f"family {family} needs a palindromic polynomial, got {work}"
        )
    if work.degree % 2 != 0 or work.degree == 0:
        raise DimensionMismatch(
            f"family {family} needs an even-degree pairing part, got degree {work.degree}"
        )
    return work


def frobenius_pattern(charpoly: PolyQ, family: str, p: int) -> WeylClassDescriptor:
    """Cycle type of the mod-p Frobenius acting on the eigenvalues.

    Family A reads the partition of factor degrees directly.  For the
    paired families B/C/D each self-reciprocal irreducible factor of
    degree 2d swaps d inverse-pairs with a sign (a negative d-cycle),
    while a factor and its distinct reciprocal of degree d permute d
    pairs without sign (a positive d-cycle).  A stray factor t-1 or t+1
    can survive the squarefree gate only at p = 2, where it stands for
    an inverse-pair collapsed onto a single residue and counts as a
    sign flip.
    """
    if family not in ("A", "B", "C", "D"):
        raise UnsupportedFamily(f"no Frobenius patterns for family {family!r}")
    if not is_prime(p):
        raise BadPrime(f"{p} is not prime")
    work = charpoly if family == "A" else _palindromic_part(charpoly, family)
    try:
        fac = factor_mod_p(work, p)
    except BadPrime as exc:
        raise RamifiedPrime(str(exc)) from None
    if not fac.is_squarefree():
        raise RamifiedPrime(f"reduction mod {p} is not squarefree")
    if any(h[0] == 0 for h, _ in fac.factors):
        raise RamifiedPrime(f"an eigenvalue vanishes mod {p}")

    if family == "A":
        return WeylClassDescriptor(fac.degrees, ())

    factors = sorted(h for h, _ in fac.factors)
    used: Set[Tuple[int, ...]] = set()
    positive: List[int] = []
    negative: List[int] = []
    for h in factors:
        if h in used:
            continue
        used.add(h)
        rev = _reciprocal_mod_p(h, p)
        if rev == h:
            d = len(h) - 1
            if d == 1:
                negative.append(1)
            else:
                # A self-reciprocal irreducible factor always has even
                # degree: an odd root count would pin some root at +-1.
                assert d % 2 == 0
                negative.append(d // 2)
        else:
            assert rev in (set(factors) - used), "palindromic pairing failed"
            used.add(rev)
            positive.append(len(h) - 1)
    return WeylClassDescriptor(
        tuple(sorted(positive, reverse=True)), tuple(sorted(negative, reverse=True))
    )


# ---------------------------------------------------------------------------
# Certification


def _root_system_for(charpoly: PolyQ, family: str) -> RootSystemType:
    d = charpoly.degree
    if family == "A":
        return RootSystemType("A", d - 1)
    if family == "B":
        if d % 2 == 0:
            raise DimensionMismatch("family B needs an odd-degree polynomial")
        return RootSystemType("B", (d - 1) // 2)
    if family in ("C", "D"):
        if d % 2 != 0:
            raise DimensionMismatch(f"family {family} needs an even-degree polynomial")
        return RootSystemType(family, d // 2)
    raise UnsupportedFamily(f"cannot certify family {family!r}")


def certify_generic_poly(
    charpoly: PolyQ, family: str, prime_budget: int
) -> GenericityCertificate:
    """Certify that the Galois action on eigenvalues is all of W.

    Primes up to the budget are scanned in order; ramified ones are
    skipped, and each unramified pattern witnesses one conjugacy class.
    The identity class comes for free (every subgroup contains it), so
    certification needs a witness for each nontrivial class.  For the
    paired families the palindromic shape already confines the action
    to signed permutations of the inverse-pairs, which is what makes a
    full set of witnesses conclusive; the same confinement is automatic
    for family A.  Family D is certified relative to the collapsed class
    list that signed cycle types can express.
    """
    if not charpoly.is_squarefree():
        raise NotSquarefree(f"{charpoly} has a repeated factor")
    rst = _root_system_for(charpoly, family)
    required = set(conjugacy_classes(rst))
    witnessed = {cls for cls in required if cls.is_identity}
    evidence: List[FrobeniusEvidence] = []
    for p in primes_up_to(prime_budget):
        if witnessed >= required:
            break
        try:
            pattern = frobenius_pattern(charpoly, family, p)
        except RamifiedPrime:
            continue
        if pattern in required and pattern not in witnessed:
            witnessed.add(pattern)
            evidence.append(FrobeniusEvidence(p, pattern))
    status = CERTIFIED if witnessed >= required else UNDETERMINED
    return GenericityCertificate(
        status, frozenset(witnessed), tuple(ev.prime for ev in evidence)
    )


def _coerce_element(g: ElementLike, kind: str = "SL") -> SemisimpleElement:
    if isinstance(g, SemisimpleElement):
        return g
    return SemisimpleElement.from_rows(g, kind=kind)


def _family_of(group: GroupDescriptor) -> str:
    if group.kind == "SL":
        return "A"
    if group.kind == "Sp":
        return "C"
    return "B" if group.size % 2 else "D"


def _has_finite_order(el: SemisimpleElement) -> bool:
    try:
        eigs = el.eigenvalues()
    except NotSemisimple:
        return False
    return all(ev.root_of_unity_order() is not None for ev in eigs)


def is_generic_element(
    g: ElementLike, prime_budget: int = 1000
) -> GenericityCertificate:
    """Classify an element: NotRegular / FiniteOrder / Certified / Undetermined.

    Regularity for the supported groups amounts to a squarefree
    characteristic polynomial: eigenvalue coincidences inside an
    inverse-pair, or with the forced +-1 eigenvalues, all show up as
    repeated roots.  Never raises; failures ride in the status field.
    """
    el = _coerce_element(g)
    if not el.charpoly.is_squarefree():
        return GenericityCertificate(NOT_REGULAR, frozenset(), ())
    if not el.has_infinite_order:
        return GenericityCertificate(FINITE_ORDER, frozenset(), ())
    return certify_generic_poly(el.charpoly, _family_of(el.group), prime_budget)


# ---------------------------------------------------------------------------
# Congruence sieves


def build_sieve(
    family: str, rank: int, prime_budget: int, seed: int
) -> CongruenceSieve:
    """Pair one prime with each nontrivial class of W(family, rank).

    An element whose pattern at p_i lands in class c_i for every i has
    all classes witnessed at once, hence is generic.  The primes are
    drawn (seeded) from the primes below the budget; any distinct
    choice works, so the draw only diversifies the sieves.
    """
    if family not in ("A", "B", "C"):
        raise UnsupportedFamily(f"sieves cover families A, B, C, not {family!r}")
    rst = RootSystemType(family, rank)
    targets = [cls for cls in conjugacy_classes(rst) if not cls.is_identity]
    pool = primes_up_to(prime_budget)
    if len(pool) < len(targets):
        raise BudgetExhausted(
            f"need {len(targets)} distinct primes, found {len(pool)} below {prime_budget}"
        )
    rng = random.Random(seed)
    primes = rng.sample(pool, len(targets))
    return CongruenceSieve(tuple(zip(primes, targets)))


# ---------------------------------------------------------------------------
# Random walks


@dataclass(frozen=True)
class WalkSample:
    """Words from a seeded random walk together with their classifications."""

    words: Tuple[SemisimpleElement, ...]
    certificates: Tuple[GenericityCertificate, ...]

    @property
    def statuses(self) -> Tuple[str, ...]:
        return tuple(cert.status for cert in self.certificates)

    @property
    def generic_proportion(self) -> Fraction:
        if not self.certificates:
            return Fraction(0)
        hits = sum(1 for cert in self.certificates if cert.is_certified)
        return Fraction(hits, len(self.certificates))


def walk_words(
    generators: Sequence[ElementLike],
    length: int,
    count: int,
    seed: int,
) -> Tuple[SemisimpleElement, ...]:
    """The `count` words of a seeded random walk, without classification.

    Letters are drawn uniformly with replacement from the symmetric
    closure of the generator list.  Each word derives its own seed from
    (seed, word index), so the sample is reproducible independently of
    evaluation order.
    """
    if length < 0 or count < 0:
        raise ValidationError("length and count must be nonnegative")
    if not generators:
        raise ValidationError("need at least one generator")
    gens = [_coerce_element(g) for g in generators]
    group = gens[0].group
    if any(g.group != group for g in gens):
        raise DimensionMismatch("generators live in different groups")
    letters: List[SemisimpleElement] = []
    seen_matrices = set()
    for g in gens + [g.inverse() for g in gens]:
        if g.matrix not in seen_matrices:
            seen_matrices.add(g.matrix)
            letters.append(g)
    identity = SemisimpleElement.from_rows(
        [[1 if i == j else 0 for j in range(group.size)] for i in range(group.size)],
        kind=group.kind,
    )
    words: List[SemisimpleElement] = []
    for w in range(count):
        rng = random.Random(seed * 1_000_003 + w)
        word = identity
        for _ in range(length):
            word = word * letters[rng.randrange(len(letters))]
        words.append(word)
    return tuple(words)


def random_walk_sample(
    generators: Sequence[ElementLike],
    length: int,
    count: int,
    seed: int,
    prime_budget: int = 1000,
) -> WalkSample:
    """Classify `count` random words of the given length by genericity."""
    words = walk_words(generators, length, count, seed)
    certificates = tuple(is_generic_element(word, prime_budget) for word in words)
    return WalkSample(words, certificates)


# ---------------------------------------------------------------------------
# Tori and density


def same_associated_torus(
    g1: ElementLike, g2: ElementLike, prime_budget: int = 1000
) -> bool:
    """Whether two certified generic elements share their centralizer torus.

    For generic elements of infinite order the centralizer of each is a
    maximal torus, and the tori coincide exactly when the elements
    commute, so a matrix commutation test decides the question.
    """
    e1, e2 = _coerce_element(g1), _coerce_element(g2)
    for label, el in (("first", e1), ("second", e2)):
        cert = is_generic_element(el, prime_budget)
        if not cert.is_certified:
            raise NotGeneric(f"{label} element is not certified generic ({cert.status})")
    if e1.group != e2.group:
        raise DimensionMismatch("elements live in different groups")
    return (e1 * e2).matrix == (e2 * e1).matrix


def _mod_p_flat(el: SemisimpleElement, p: int) -> Tuple[int, ...]:
    out: List[int] = []
    for row in el.matrix:
        for entry in row:
            if entry.denominator % p == 0:
                raise BadPrime(f"entry {entry} is not {p}-integral")
            out.append(entry.numerator * pow(entry.denominator, -1, p) % p)
    return tuple(out)


def _special_linear_order(n: int, p: int) -> int:
    order = 1
    for k in range(1, n):
        order *= p ** (n - k) * (p ** (k + 1) - 1)
    return order


def generates_mod_p(generators: Sequence[ElementLike], p: int) -> bool:
    """Whether the reductions mod p generate all of SL_n(F_p), n in {2, 3}.

    Decided by breadth-first closure, which stays feasible because the
    target group order bounds the search.  Surjectivity mod one prime
    is a cheap positive witness for Zariski density of the generated
    subgroup.
    """
    if not is_prime(p) or p < 5:
        raise BadPrime(f"need a prime p >= 5, got {p}")
    if not generators:
        raise ValidationError("need at least one generator")
    gens = [_coerce_element(g) for g in generators]
    group = gens[0].group
    if any(g.group != group for g in gens):
        raise DimensionMismatch("generators live in different groups")
    if group.kind != "SL" or group.size not in (2, 3):
        raise UnsupportedGroup(f"mod-p generation covers SL_2 and SL_3, not {group}")
    flats = [_mod_p_flat(g, p) for g in gens]
    target = _special_linear_order(group.size, p)
    return closure_order(flats, group.size, p, target) == target


def long_root_type(rst: RootSystemType) -> str:
    """Type of the subgroup generated by the long-root subgroups of a torus.

    In the simply-laced families every root is long and the subgroup is
    everything, so only the multiply-laced types get a name here.
    """
    if rst.family == "C":
        return f"(A1)^{rst.rank}"
    if rst.family == "B":
        return f"D{rst.rank}"
    if rst.family == "F":
        return "D4"
    if rst.family == "G":
        return "A2"
    raise UnsupportedFamily(f"{rst} has only long roots")


_EXPECTED_GROUP = {
    "A": lambda r: GroupDescriptor("SL", r + 1),
    "B": lambda r: GroupDescriptor("SO", 2 * r + 1),
    "C": lambda r: GroupDescriptor("Sp", 2 * r),
    "D": lambda r: GroupDescriptor("SO", 2 * r),
}

DENSE = "dense"
DENSE_OR_LONG_ROOT = "dense or long-root subgroup"


@dataclass(frozen=True)
class DichotomyReport:
    root_system: RootSystemType
    conclusion: str
    long_root: Optional[str]
    corroborated: Optional[bool]


def dichotomy_check(
    g: ElementLike, x: ElementLike, family: str, rank: int, p: int = 5
) -> DichotomyReport:
    """What the subgroup generated by a generic g and a non-commuting x can be.

    When all roots share one length the subgroup is Zariski dense, and
    for SL_2/SL_3 with p-integral entries the report corroborates that
    by checking surjectivity mod p.  For the multiply-laced families
    density can only fail onto the long-root subgroup of the torus of
    g, whose type the report names; deciding between the two branches
    is out of scope.
    """
    rst = RootSystemType(family, rank)
    if family not in _EXPECTED_GROUP:
        raise UnsupportedGroup(f"no matrix realization for family {family!r}")
    expected = _EXPECTED_GROUP[family](rank)
    el_g = _coerce_element(g, kind=expected.kind)
    el_x = _coerce_element(x, kind=expected.kind)
    for label, el in (("g", el_g), ("x", el_x)):
        if el.group != expected:
            raise DimensionMismatch(
                f"{label} lives in {el.group}, but {rst} calls for {expected}"
            )
    cert = is_generic_element(el_g)
    if not cert.is_certified:
        raise HypothesisViolated(f"g is not certified generic ({cert.status})")
    if _has_finite_order(el_x):
        raise HypothesisViolated("x has finite order")
    if (el_g * el_x).matrix == (el_x * el_g).matrix:
        raise HypothesisViolated("x commutes with g")

    if family in ("A", "D"):
        corroborated: Optional[bool] = None
        if expected.kind == "SL" and expected.size in (2, 3):
            try:
                corroborated = generates_mod_p([el_g, el_x], p)
            except BadPrime:
                corroborated = None
        return DichotomyReport(rst, DENSE, None, corroborated)
    return DichotomyReport(rst, DENSE_OR_LONG_ROOT, long_root_type(rst), None)
