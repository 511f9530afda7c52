from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from abideals.affine import (
    AffineRoot,
    alpha_zero,
    affine_act,
    compose,
    enumerate_Z1,
    enumerate_minuscule,
    identity_element,
    in_fundamental_domain,
    inverse,
    inversion_set,
    s_subset,
    simple_affine_reflection,
    z_of,
)
from abideals.dynkin import component_count, diagram_of
from abideals.errors import IndexOutOfRange
from abideals.ideals import enumerate_abelian_ideals, generators, kappa, roots_of
from abideals.rootsys import CorootVector, Root, TypeSpec, build_root_system, coeff_string, coroot


def rs_of(text):
    return build_root_system(TypeSpec.parse(text))


def test_alpha_zero():
    rs = rs_of("A1")
    a0 = alpha_zero(rs)
    assert a0 == AffineRoot(Root((-1,)), 1)
    assert a0.is_positive and not (-a0).is_positive


def test_identity_acts_trivially():
    rs = rs_of("C2")
    e = identity_element(rs)
    for gamma in rs.positive_roots:
        for level in (0, 1):
            beta = AffineRoot(gamma, level)
            assert affine_act(rs, e, beta) == beta


def test_s0_is_theta_pair():
    rs = rs_of("A1")
    s0 = simple_affine_reflection(rs, 0)
    assert s0.r == CorootVector((-1,))
    assert s0.v == ((-1,),)
    # s_0 sends alpha_0 to its negative.
    assert affine_act(rs, s0, alpha_zero(rs)) == -alpha_zero(rs)


@pytest.mark.parametrize("text", ["A2", "B2", "C3", "G2", "D4"])
def test_affine_reflections_are_involutions(text):
    rs = rs_of(text)
    e = identity_element(rs)
    for i in range(rs.rank + 1):
        s = simple_affine_reflection(rs, i)
        assert compose(rs, s, s) == e
        assert inverse(rs, s) == s
    with pytest.raises(IndexOutOfRange):
        simple_affine_reflection(rs, rs.rank + 1)


@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_group_action_roundtrip(data):
    rs = rs_of(data.draw(st.sampled_from(["A2", "C2", "B3", "G2"])))
    word = data.draw(st.lists(st.integers(0, rs.rank), max_size=6))
    w = identity_element(rs)
    for i in word:
        w = compose(rs, simple_affine_reflection(rs, i), w)
    winv = inverse(rs, w)
    assert compose(rs, w, winv) == identity_element(rs)
    gamma = data.draw(st.sampled_from(rs.positive_roots))
    level = data.draw(st.integers(-2, 2))
    beta = AffineRoot(gamma, level)
    assert affine_act(rs, w, affine_act(rs, winv, beta)) == beta


def test_compose_matches_action():
    rs = rs_of("C2")
    s0 = simple_affine_reflection(rs, 0)
    s1 = simple_affine_reflection(rs, 1)
    both = compose(rs, s0, s1)
    for gamma in rs.positive_roots:
        beta = AffineRoot(gamma, 1)
        assert affine_act(rs, both, beta) == affine_act(rs, s0, affine_act(rs, s1, beta))


def test_a1_minuscule():
    rs = rs_of("A1")
    records = enumerate_minuscule(rs)
    assert len(records) == 2
    empty, s0_rec = records
    assert empty.ideal.mask == 0 and empty.length == 0
    assert roots_of(rs, s0_rec.ideal) == (Root((1,)),)
    assert s0_rec.z == CorootVector((1,))
    assert s0_rec.element.word == (0,)


TABLE_A3_Z = {
    (): "000",
    ("111",): "111",
    ("110",): "110",
    ("011",): "011",
    ("100",): "100",
    ("001",): "001",
    ("110", "011"): "010",
    ("010",): "121",
}


def test_a3_z_column_matches_reference_table():
    rs = rs_of("A3")
    got = {}
    for rec in enumerate_minuscule(rs):
        gens = tuple(
            sorted((coeff_string(g.coeffs) for g in generators(rs, rec.ideal)), reverse=True)
        )
        got[gens] = coeff_string(rec.z.coeffs)
    assert got == TABLE_A3_Z


def test_s_subset_examples():
    assert s_subset(CorootVector((1, 2, 1))) == frozenset({1, 3})
    assert s_subset(CorootVector((0, 1, 0))) == frozenset({2})
    assert s_subset(CorootVector((0, 0, 0))) == frozenset()


def test_z1_examples():
    rs = rs_of("A1")
    assert enumerate_Z1(rs) == {CorootVector((0,)), CorootVector((1,))}
    a3 = rs_of("A3")
    expected = {
        CorootVector(v)
        for v in [
            (0, 0, 0), (1, 1, 1), (1, 1, 0), (0, 1, 1),
            (1, 0, 0), (0, 0, 1), (0, 1, 0), (1, 2, 1),
        ]
    }
    assert enumerate_Z1(a3) == expected


@pytest.mark.parametrize("text", ["A4", "B3", "C4", "D4", "G2", "F4"])
def test_z1_count_and_match(text):
    rs = rs_of(text)
    z1 = enumerate_Z1(rs)
    assert len(z1) == 1 << rs.rank
    assert {rec.z for rec in enumerate_minuscule(rs)} == z1


def test_fundamental_domain_examples():
    rs = rs_of("A1")
    assert in_fundamental_domain(rs, (0,))
    assert in_fundamental_domain(rs, (Fraction(1, 2),))
    for text in ["A1", "C2", "G2"]:
        r = rs_of(text)
        theta_vee = coroot(r, r.highest_root).coeffs
        coords = tuple(
            Fraction(2 * m) / r.symmetric_form[i][i] for i, m in enumerate(theta_vee)
        )
        assert not in_fundamental_domain(r, coords)


@pytest.mark.parametrize("text", ["A3", "B3", "C3", "G2", "D4"])
def test_inversion_sets_match_ideals(text):
    rs = rs_of(text)
    for rec in enumerate_minuscule(rs):
        expected = frozenset(AffineRoot(-g, 1) for g in roots_of(rs, rec.ideal))
        n_w = inversion_set(rs, rec.element)
        assert n_w == expected
        assert len(n_w) == rec.length == len(rec.element.word)


@pytest.mark.parametrize("text", ["A3", "B3", "C3", "G2", "F4", "D4"])
def test_subset_map_is_injective(text):
    rs = rs_of(text)
    records = enumerate_minuscule(rs)
    assert len({rec.s_subset for rec in records}) == 1 << rs.rank
    assert {rec.ideal.mask for rec in records} == {
        i.mask for i in enumerate_abelian_ideals(rs)
    }


def test_general_bijection_is_not_good():
    """A3 has an ideal with one generator whose subset has two components."""
    rs = rs_of("A3")
    diagram = diagram_of(rs)
    witnesses = [
        rec
        for rec in enumerate_minuscule(rs)
        if kappa(rs, rec.ideal) == 1 and component_count(diagram, rec.s_subset) == 2
    ]
    assert witnesses
    assert any(rec.z == CorootVector((1, 2, 1)) for rec in witnesses)


def test_z_of_identity_and_words():
    rs = rs_of("C2")
    assert z_of(rs, identity_element(rs)) == CorootVector((0, 0))
    for rec in enumerate_minuscule(rs):
        w = identity_element(rs)
        for i in reversed(rec.element.word):
            w = compose(rs, simple_affine_reflection(rs, i), w)
        assert w == rec.element
