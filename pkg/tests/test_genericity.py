"""Genericity certification, sieves, walks, and the density dichotomy.

The certification route is cross-checked two independent ways: small
Galois groups computed by sympy, and a frozen symplectic example whose
witness primes were recorded once and must never drift.
"""

import math
from collections import Counter
from fractions import Fraction

import pytest
import sympy
from sympy.abc import x as sym_x

from commensura.errors import (
    BadPrime,
    BudgetExhausted,
    DimensionMismatch,
    HypothesisViolated,
    NotGeneric,
    NotPalindromic,
    NotSquarefree,
    RamifiedPrime,
    UnsupportedFamily,
    UnsupportedGroup,
    ValidationError,
)
from commensura.exactnum import PolyQ
from commensura.genericity import (
    CERTIFIED,
    DENSE,
    DENSE_OR_LONG_ROOT,
    FINITE_ORDER,
    NOT_REGULAR,
    UNDETERMINED,
    CongruenceSieve,
    build_sieve,
    certify_generic_poly,
    dichotomy_check,
    frobenius_pattern,
    generates_mod_p,
    is_generic_element,
    long_root_type,
    random_walk_sample,
    same_associated_torus,
    walk_words,
)
from commensura.rootsys import RootSystemType, WeylClassDescriptor
from commensura.weakcomm import SemisimpleElement

WALK_GENS = [[[1, 2], [0, 1]], [[1, 0], [2, 1]]]

# symplectic element with full Weyl action; witness primes frozen
SP6_ROWS = [
    [1, 1, 1, -1, 0, -2],
    [0, 1, 1, 0, 0, -2],
    [0, -1, 0, 0, -1, 1],
    [1, 1, 1, 0, 0, -2],
    [0, 2, 1, -1, 1, -2],
    [0, 0, -1, 0, 0, 2],
]


# ---------------------------------------------------------------------------
# Frobenius patterns


def test_pattern_family_a_reads_factor_degrees():
    f = PolyQ.from_coeffs([-1, -1, 0, 1])  # t^3 - t - 1, irreducible mod 2
    assert frobenius_pattern(f, "A", 2) == WeylClassDescriptor((3,), ())
    assert frobenius_pattern(f, "A", 59) == WeylClassDescriptor((1, 1, 1), ())


def test_pattern_ramified_prime_rejected():
    f = PolyQ.from_coeffs([-1, -1, 0, 1])  # discriminant -23
    with pytest.raises(RamifiedPrime):
        frobenius_pattern(f, "A", 23)


def test_pattern_paired_family():
    quartic = PolyQ.from_coeffs([1, -3, 1, -3, 1])
    assert frobenius_pattern(quartic, "C", 7) == WeylClassDescriptor((2,), ())


def test_pattern_demands_palindromic_input():
    with pytest.raises(NotPalindromic):
        frobenius_pattern(PolyQ.from_coeffs([-1, -1, 0, 1]), "C", 5)


def test_pattern_family_b_needs_forced_root():
    quartic = PolyQ.from_coeffs([1, -3, 1, -3, 1])
    quintic = quartic * PolyQ.from_coeffs([-1, 1])  # (t - 1) * quartic
    pattern = frobenius_pattern(quintic, "B", 7)
    assert pattern.degree == 2
    with pytest.raises(NotPalindromic):
        frobenius_pattern(quartic, "B", 7)


# ---------------------------------------------------------------------------
# certification, cross-checked against sympy Galois groups


@pytest.mark.parametrize(
    "coeffs",
    [(-1, -1, 0, 1), (-1, -3, 0, 1), (-1, -1, 0, 0, 1), (1, 0, 0, 0, 1)],
    ids=["t3-t-1", "t3-3t-1", "t4-t-1", "t4+1"],
)
def test_family_a_certification_matches_galois_group(coeffs):
    degree = len(coeffs) - 1
    cert = certify_generic_poly(PolyQ.from_coeffs(coeffs), "A", 2000)
    group, _ = sympy.galois_group(sum(c * sym_x**i for i, c in enumerate(coeffs)))
    full = group.order() == math.factorial(degree)
    assert cert.is_certified == full
    assert cert.status == (CERTIFIED if full else UNDETERMINED)


def test_certified_cubic_witnesses():
    cert = certify_generic_poly(PolyQ.from_coeffs([-1, -1, 0, 1]), "A", 100)
    assert cert.primes_used == (2, 5)
    assert len(cert.witnessed) == 3  # all classes of S_3, identity included
    assert sorted(cert.primes_used) == list(cert.primes_used)


def test_certified_paired_quartic():
    cert = certify_generic_poly(PolyQ.from_coeffs([1, -3, 1, -3, 1]), "C", 1000)
    assert cert.is_certified
    assert cert.primes_used == (2, 7, 17, 61)
    assert len(cert.witnessed) == 5


def test_certification_needs_squarefree_input():
    with pytest.raises(NotSquarefree):
        certify_generic_poly(PolyQ.from_coeffs([1, -2, 1]), "A", 100)


# ---------------------------------------------------------------------------
# element classification


def test_classify_hyperbolic_element():
    cert = is_generic_element([[2, 1], [1, 1]])
    assert cert.is_certified


def test_classify_unipotent_as_not_regular():
    cert = is_generic_element([[1, 1], [0, 1]])
    assert cert.status == NOT_REGULAR
    assert cert.witnessed == frozenset() and cert.primes_used == ()


def test_classify_rotation_as_finite_order():
    assert is_generic_element([[0, -1], [1, 0]]).status == FINITE_ORDER


def test_classification_is_budget_sensitive():
    # a tiny budget cannot witness anything beyond the identity class
    cert = is_generic_element([[2, 1], [1, 1]], prime_budget=1)
    assert cert.status == UNDETERMINED


def test_frozen_symplectic_certificate():
    g = SemisimpleElement.from_rows(SP6_ROWS, kind="Sp")
    assert g.charpoly == PolyQ.from_coeffs([1, -5, 13, -17, 13, -5, 1])
    cert = is_generic_element(g)
    assert cert.is_certified
    assert cert.primes_used == (2, 3, 7, 19, 43, 59, 61, 101, 271)


# ---------------------------------------------------------------------------
# sieves


def test_sieve_covers_nontrivial_classes():
    sieve = build_sieve("A", 2, 100, seed=1)
    assert len(sieve.constraints) == 2
    assert len(set(sieve.primes)) == 2
    assert all(not cls.is_identity for _, cls in sieve.constraints)
    assert build_sieve("A", 2, 100, seed=1) == sieve  # seeded, so reproducible


def test_sieve_budget_exhaustion():
    # 9 nontrivial classes for B_3 but only 8 primes below 20
    with pytest.raises(BudgetExhausted):
        build_sieve("B", 3, 20, seed=0)


def test_sieve_family_gate():
    with pytest.raises(UnsupportedFamily):
        build_sieve("D", 4, 100, seed=0)


def test_sieve_validation():
    cls2 = WeylClassDescriptor((2,), ())
    with pytest.raises(ValidationError):
        CongruenceSieve(((5, cls2), (5, cls2)))
    with pytest.raises(ValidationError):
        CongruenceSieve(((5, WeylClassDescriptor((1, 1), ())),))


# ---------------------------------------------------------------------------
# random walks


def test_walk_sample_frozen_statistics():
    sample = random_walk_sample(WALK_GENS, length=12, count=25, seed=11)
    assert Counter(sample.statuses) == {"Certified": 22, "NotRegular": 3}
    assert sample.generic_proportion == Fraction(22, 25)


def test_walk_words_reproducible():
    a = walk_words(WALK_GENS, 8, 5, seed=3)
    b = walk_words(WALK_GENS, 8, 5, seed=3)
    assert [w.matrix for w in a] == [w.matrix for w in b]
    c = walk_words(WALK_GENS, 8, 5, seed=4)
    assert [w.matrix for w in a] != [w.matrix for w in c]


def test_walk_prefix_is_seed_stable():
    # word w depends only on (seed, w), not on how many words are asked for
    few = walk_words(WALK_GENS, 8, 3, seed=3)
    many = walk_words(WALK_GENS, 8, 10, seed=3)
    assert [w.matrix for w in few] == [w.matrix for w in many[:3]]


def test_walk_degenerate_parameters():
    words = walk_words(WALK_GENS, 0, 4, seed=0)
    assert all(w.matrix == ((1, 0), (0, 1)) for w in words)
    assert walk_words(WALK_GENS, 5, 0, seed=0) == ()
    with pytest.raises(ValidationError):
        walk_words(WALK_GENS, -1, 4, seed=0)
    with pytest.raises(ValidationError):
        walk_words([], 5, 4, seed=0)


def test_walk_sample_certificates_match_reclassification():
    sample = random_walk_sample(WALK_GENS, 6, 8, seed=2, prime_budget=200)
    for word, cert in zip(sample.words, sample.certificates):
        assert is_generic_element(word, prime_budget=200) == cert


# ---------------------------------------------------------------------------
# mod-p generation and the dichotomy


def test_standard_shears_generate_sl2():
    assert generates_mod_p([[[1, 1], [0, 1]], [[1, 0], [1, 1]]], 5)
    assert generates_mod_p([[[1, 2], [0, 1]], [[1, 0], [2, 1]]], 7)


def test_single_shear_does_not_generate():
    assert not generates_mod_p([[[1, 1], [0, 1]]], 5)


def test_cyclic_matrix_does_not_generate_sl3():
    assert not generates_mod_p([[[0, 1, 0], [0, 0, 1], [1, 0, 0]]], 5)


def test_generation_gates():
    with pytest.raises(BadPrime):
        generates_mod_p([[[1, 1], [0, 1]]], 4)
    with pytest.raises(BadPrime):
        generates_mod_p([[[1, 1], [0, 1]]], 3)  # p >= 5 required
    with pytest.raises(BadPrime):
        generates_mod_p([[[Fraction(1, 5), 0], [0, 5]]], 5)  # not 5-integral
    with pytest.raises(UnsupportedGroup):
        ident4 = [[1 if i == j else 0 for j in range(4)] for i in range(4)]
        generates_mod_p([ident4], 5)


def test_dichotomy_simply_laced_is_dense():
    report = dichotomy_check([[2, 1], [1, 1]], [[1, 1], [0, 1]], "A", 1, p=5)
    assert report.root_system == RootSystemType("A", 1)
    assert report.conclusion == DENSE
    assert report.long_root is None
    assert report.corroborated is True


def test_dichotomy_multiply_laced_names_long_root_subgroup():
    g = SemisimpleElement.from_rows(SP6_ROWS, kind="Sp")
    xrows = [[1 if i == j else 0 for j in range(6)] for i in range(6)]
    xrows[0][3] = 1  # symplectic transvection
    x = SemisimpleElement.from_rows(xrows, kind="Sp")
    report = dichotomy_check(g, x, "C", 3)
    assert report.conclusion == DENSE_OR_LONG_ROOT
    assert report.long_root == "(A1)^3"
    assert report.corroborated is None


def test_dichotomy_hypothesis_checks():
    g = [[2, 1], [1, 1]]
    with pytest.raises(HypothesisViolated):
        dichotomy_check(g, [[5, 3], [3, 2]], "A", 1)  # x commutes with g
    with pytest.raises(HypothesisViolated):
        dichotomy_check(g, [[0, -1], [1, 0]], "A", 1)  # x has finite order
    with pytest.raises(HypothesisViolated):
        dichotomy_check([[1, 1], [0, 1]], g, "A", 1)  # g is not generic


def test_dichotomy_group_shape_checks():
    with pytest.raises(DimensionMismatch):
        dichotomy_check([[2, 1], [1, 1]], [[1, 1], [0, 1]], "A", 2)
    with pytest.raises(UnsupportedGroup):
        dichotomy_check([[2, 1], [1, 1]], [[1, 1], [0, 1]], "G", 2)


def test_long_root_types():
    assert long_root_type(RootSystemType("C", 3)) == "(A1)^3"
    assert long_root_type(RootSystemType("B", 4)) == "D4"
    assert long_root_type(RootSystemType("F", 4)) == "D4"
    assert long_root_type(RootSystemType("G", 2)) == "A2"
    with pytest.raises(UnsupportedFamily):
        long_root_type(RootSystemType("A", 3))


# ---------------------------------------------------------------------------
# shared tori


def test_commuting_generic_elements_share_torus():
    assert same_associated_torus([[2, 1], [1, 1]], [[5, 3], [3, 2]])


def test_non_commuting_elements_do_not():
    assert not same_associated_torus([[2, 1], [1, 1]], [[3, 2], [1, 1]])


def test_torus_comparison_requires_genericity():
    with pytest.raises(NotGeneric):
        same_associated_torus([[1, 1], [0, 1]], [[2, 1], [1, 1]])
