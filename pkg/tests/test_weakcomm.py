"""Weak commensurability: element validation, the relation engine, verdicts.

Every "yes" the engine returns carries a witness, and each test here
re-verifies that witness with an independent exact product rather than
trusting the verdict object.
"""

from fractions import Fraction

import pytest

from commensura.errors import (
    DimensionMismatch,
    FiniteOrder,
    NotSemisimple,
    UnsupportedGroup,
    ValidationError,
    ZeroBase,
)
from commensura.exactnum import PolyQ, algebraic_product, equals_one, roots_of
from commensura.weakcomm import (
    CommensurabilityVerdict,
    GroupDescriptor,
    SemisimpleElement,
    multiplicatively_independent,
    relation_lattice,
    trace_ad,
    trace_field,
    weakly_commensurable,
    weakly_commensurable_samples,
    weakly_contained,
)

GAMMA = SemisimpleElement.from_rows([[2, 1], [1, 1]])
GAMMA_SQ = SemisimpleElement.from_rows([[5, 3], [3, 2]])
OTHER = SemisimpleElement.from_rows([[3, 2], [1, 1]])  # eigenvalues 2 +- sqrt(3)
ROT4 = [[0, -1], [1, 0]]


def eig_product(g, exps):
    pairs = [(ev, e) for ev, e in zip(g.eigenvalues(), exps) if e]
    return algebraic_product(pairs)


# ---------------------------------------------------------------------------
# elements and groups


def test_element_basic_data():
    assert GAMMA.trace == 3
    assert GAMMA.det == 1
    assert GAMMA.charpoly == PolyQ.from_coeffs([1, -3, 1])
    assert len(GAMMA.eigenvalues()) == 2
    assert GAMMA.has_infinite_order


def test_element_accepts_string_fractions():
    g = SemisimpleElement.from_rows([["2", "1"], ["1", "1"]])
    assert g.matrix == GAMMA.matrix


def test_inverse_and_product():
    inv = GAMMA.inverse()
    assert inv.matrix == ((Fraction(1), Fraction(-1)), (Fraction(-1), Fraction(2)))
    prod = GAMMA * inv
    assert prod.matrix == ((Fraction(1), Fraction(0)), (Fraction(0), Fraction(1)))


def test_determinant_must_be_one():
    with pytest.raises(ValidationError):
        SemisimpleElement.from_rows([[2, 0], [0, 1]])


def test_matrix_must_be_square():
    with pytest.raises(DimensionMismatch):
        SemisimpleElement.from_rows([[1, 2, 3], [4, 5, 6]])


def test_unipotent_rejected_only_at_spectral_access():
    shear = SemisimpleElement.from_rows([[1, 1], [0, 1]])  # construction is fine
    with pytest.raises(NotSemisimple):
        shear.eigenvalues()


def test_identity_is_semisimple_despite_repeated_roots():
    ident = SemisimpleElement.from_rows([[1, 0], [0, 1]])
    assert [ev.root_of_unity_order() for ev in ident.eigenvalues()] == [1, 1]
    assert not ident.has_infinite_order


def test_symplectic_form_is_enforced():
    # block [[A, 0], [0, A^-T]] preserves the standard form
    ok = [[1, 1, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, -1, 1]]
    SemisimpleElement.from_rows(ok, kind="Sp")
    with pytest.raises(ValidationError):
        SemisimpleElement.from_rows(
            [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 2, 0], [0, 0, 0, 1]], kind="Sp"
        )


def test_split_orthogonal_form():
    g = SemisimpleElement.from_rows([[2, 0], [0, Fraction(1, 2)]], kind="SO")
    assert g.det == 1
    with pytest.raises(ValidationError):
        SemisimpleElement.from_rows([[2, 0], [0, 2]], kind="SO")


def test_group_descriptor_validation():
    with pytest.raises(UnsupportedGroup):
        GroupDescriptor("GL", 2)
    with pytest.raises(DimensionMismatch):
        GroupDescriptor("Sp", 3)
    assert str(GroupDescriptor("SL", 4)) == "SL_4"


def test_product_across_groups_rejected():
    sp = SemisimpleElement.from_rows([[2, 1], [1, 1]], kind="Sp")
    with pytest.raises(DimensionMismatch):
        GAMMA * sp


# ---------------------------------------------------------------------------
# relation lattices


def test_no_relations_for_a_lone_integer():
    lat = relation_lattice([2], bound=10)
    assert lat.rank == 0 and lat.basis == ()


def test_power_relation_found():
    lat = relation_lattice([2, 4], bound=10)
    assert lat.basis == ((2, -1),)
    # and the basis row really is a relation
    assert Fraction(2) ** 2 * Fraction(4) ** -1 == 1


def test_coprime_integers_are_independent():
    assert relation_lattice([2, 3], bound=10).rank == 0


def test_three_term_relation():
    lat = relation_lattice([2, 3, 12], bound=10)
    assert lat.basis == ((2, 1, -1),)


def test_relation_among_algebraic_units():
    # lam = (3+sqrt5)/2 and its cube
    lam = max(
        roots_of(PolyQ.from_coeffs([1, -3, 1])),
        key=lambda r: r.abs_log_interval(64).lo,
    )
    cube = algebraic_product([(lam, 3)])
    lat = relation_lattice([lam, cube], bound=10)
    assert lat.basis == ((3, -1),)
    assert equals_one(algebraic_product([(lam, 3), (cube, -1)]))


def test_relation_lattice_rejects_zero_and_torsion():
    with pytest.raises(ZeroBase):
        relation_lattice([0, 2])
    with pytest.raises(FiniteOrder):
        relation_lattice([-1])


# ---------------------------------------------------------------------------
# pairwise verdicts


def test_element_and_its_square_are_commensurable():
    v = weakly_commensurable(GAMMA, GAMMA_SQ, bound=10)
    assert v.is_yes and v.kind == "yes"
    exps1, exps2 = v.witness
    p1 = eig_product(GAMMA, exps1)
    p2 = eig_product(GAMMA_SQ, exps2)
    assert p1 == p2 == v.common_value
    assert not equals_one(p1)


def test_independent_units_give_bounded_no():
    v = weakly_commensurable(GAMMA, OTHER, bound=6)
    assert not v.is_yes
    assert v.kind == "no_up_to_bound" and v.bound == 6
    assert v.witness is None and v.common_value is None


def test_finite_order_input_rejected():
    rot = SemisimpleElement.from_rows(ROT4)
    with pytest.raises(FiniteOrder):
        weakly_commensurable(rot, GAMMA)


def test_shared_torsion_shortcut():
    # rotation block + independent hyperbolic blocks: the only common
    # products are roots of unity, and -1 is found without lattice work
    a = SemisimpleElement.from_rows(
        [[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 2, 1], [0, 0, 1, 1]]
    )
    b = SemisimpleElement.from_rows(
        [[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 3, 2], [0, 0, 1, 1]]
    )
    v = weakly_commensurable(a, b, bound=8)
    assert v.is_yes
    assert v.common_value.root_of_unity_order() == 2
    exps1, exps2 = v.witness
    assert eig_product(a, exps1) == eig_product(b, exps2) == v.common_value


def test_verdict_dataclass_defaults():
    v = CommensurabilityVerdict("no_up_to_bound", 20)
    assert not v.is_yes and v.witness is None


# ---------------------------------------------------------------------------
# independence and containment


def test_pair_independence():
    res = multiplicatively_independent([GAMMA, OTHER], bound=6)
    assert res.independent and bool(res) and res.certificate is None


def test_dependence_certificate_is_exact():
    res = multiplicatively_independent([GAMMA, GAMMA_SQ], bound=10)
    assert not res.independent
    blocks = res.certificate
    assert len(blocks) == 2
    full = []
    for g, exps in zip([GAMMA, GAMMA_SQ], blocks):
        full.extend((ev, e) for ev, e in zip(g.eigenvalues(), exps) if e)
    assert equals_one(algebraic_product(full))
    # at least one block alone is nontrivial, else the certificate is vacuous
    assert any(
        not equals_one(eig_product(g, exps))
        for g, exps in zip([GAMMA, GAMMA_SQ], blocks)
        if any(exps)
    )


def test_containment_in_a_sample():
    res = weakly_contained([GAMMA], [OTHER, GAMMA_SQ], bound=10)
    assert res.contained and bool(res)
    left, right = res.witness
    pairs = [
        (ev, e)
        for g, exps in zip([GAMMA], left)
        for ev, e in zip(g.eigenvalues(), exps)
        if e
    ]
    other_pairs = [
        (ev, e)
        for g, exps in zip([OTHER, GAMMA_SQ], right)
        for ev, e in zip(g.eigenvalues(), exps)
        if e
    ]
    assert algebraic_product(pairs) == algebraic_product(other_pairs) == res.common_value


def test_containment_failure():
    res = weakly_contained([GAMMA], [OTHER], bound=6)
    assert not res.contained and res.witness is None


def test_containment_demands_infinite_order():
    rot = SemisimpleElement.from_rows(ROT4)
    with pytest.raises(FiniteOrder):
        weakly_contained([rot], [GAMMA])


def test_sample_comparison_skips_torsion():
    rot = SemisimpleElement.from_rows(ROT4)
    cmp = weakly_commensurable_samples([GAMMA, rot], [GAMMA_SQ], bound=10)
    assert cmp.skipped_first == (1,) and cmp.skipped_second == ()
    assert cmp.forward and cmp.backward and cmp.aggregate


def test_sample_comparison_directional():
    cmp = weakly_commensurable_samples([GAMMA, OTHER], [GAMMA_SQ], bound=6)
    assert not cmp.forward  # OTHER matches nothing on the right
    assert cmp.backward
    assert not cmp.aggregate


# ---------------------------------------------------------------------------
# adjoint traces


def test_trace_ad_sl2_formula():
    # on sl_2, conjugation by g has trace tr(g)^2 - 1
    for rows in ([[2, 1], [1, 1]], [[3, 2], [1, 1]], [[1, 1], [0, 1]]):
        g = SemisimpleElement.from_rows(rows)
        assert trace_ad(g) == g.trace**2 - 1


def test_trace_ad_identity_is_algebra_dimension():
    assert trace_ad(SemisimpleElement.from_rows([[1, 0], [0, 1]])) == 3
    ident4 = [[1 if i == j else 0 for j in range(4)] for i in range(4)]
    assert trace_ad(SemisimpleElement.from_rows(ident4)) == 15  # dim sl_4
    assert trace_ad(SemisimpleElement.from_rows(ident4, kind="Sp")) == 10  # dim sp_4


def test_trace_ad_agrees_for_sp2_and_sl2():
    assert trace_ad(GAMMA) == trace_ad(SemisimpleElement.from_rows([[2, 1], [1, 1]], kind="Sp"))


def test_trace_field_of_rational_sample():
    fd = trace_field([GAMMA, OTHER])
    assert fd.is_rational and fd.degree == 1
    assert fd.minpoly == PolyQ.x()


def test_trace_field_validation():
    with pytest.raises(ValidationError):
        trace_field([])
    sp = SemisimpleElement.from_rows([[2, 1], [1, 1]], kind="Sp")
    with pytest.raises(DimensionMismatch):
        trace_field([GAMMA, sp])
