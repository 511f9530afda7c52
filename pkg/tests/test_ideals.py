from __future__ import annotations

import itertools

import pytest

from abideals.errors import InvalidIdeal
from abideals.ideals import (
    AbelianIdeal,
    enumerate_abelian_ideals,
    generators,
    ideal_from_roots,
    is_abelian_upper_ideal,
    kappa,
    roots_of,
    upper_closure,
    upper_covering_polynomial,
)
from abideals.rootsys import Root, TypeSpec, build_root_system


def rs_of(text):
    return build_root_system(TypeSpec.parse(text))


def brute_force_ideal_masks(rs) -> set[int]:
    """Scan every subset of the positive roots with the definitional check."""
    pos = rs.positive_roots
    out = set()
    for mask in range(1 << len(pos)):
        subset = [pos[i] for i in range(len(pos)) if mask >> i & 1]
        if is_abelian_upper_ideal(rs, subset):
            out.add(mask)
    return out


def test_is_abelian_examples():
    for text in ["A2", "B2", "C3", "G2", "F4"]:
        rs = rs_of(text)
        assert is_abelian_upper_ideal(rs, [rs.highest_root])
    a2 = rs_of("A2")
    assert not is_abelian_upper_ideal(a2, [Root((1, 0))])
    assert not is_abelian_upper_ideal(a2, list(a2.positive_roots))
    assert is_abelian_upper_ideal(a2, [])


@pytest.mark.parametrize("text", ["A1", "A2", "A3", "B2", "C2", "C3", "G2"])
def test_enumeration_matches_brute_force(text):
    rs = rs_of(text)
    enumerated = {ideal.mask for ideal in enumerate_abelian_ideals(rs)}
    assert enumerated == brute_force_ideal_masks(rs)


def test_c2_ideals_exactly():
    rs = rs_of("C2")
    expected = [
        set(),
        {(2, 1)},
        {(1, 1), (2, 1)},
        {(0, 1), (1, 1), (2, 1)},
    ]
    got = [{r.coeffs for r in roots_of(rs, ideal)} for ideal in enumerate_abelian_ideals(rs)]
    assert got == expected


@pytest.mark.parametrize("text", ["A4", "B4", "C4", "D4", "F4", "G2", "E6"])
def test_counting(text):
    rs = rs_of(text)
    assert len(enumerate_abelian_ideals(rs)) == 1 << rs.rank


def test_e8_count():
    assert len(enumerate_abelian_ideals(rs_of("E8"))) == 256


def test_deterministic_order():
    rs = rs_of("B3")
    ideals = enumerate_abelian_ideals(rs)
    keys = [(i.size, i.mask) for i in ideals]
    assert keys == sorted(keys)
    assert ideals[0].mask == 0


def test_generators_examples():
    a3 = rs_of("A3")
    ideal = ideal_from_roots(a3, [Root((1, 1, 0)), Root((0, 1, 1)), Root((1, 1, 1))])
    gens = generators(a3, ideal)
    assert {g.coeffs for g in gens} == {(1, 1, 0), (0, 1, 1)}
    assert kappa(a3, ideal) == 2
    assert generators(a3, AbelianIdeal(0)) == ()
    c2 = rs_of("C2")
    full = max(enumerate_abelian_ideals(c2), key=lambda i: i.size)
    assert {g.coeffs for g in generators(c2, full)} == {(0, 1)}


def test_generators_rejects_invalid():
    a3 = rs_of("A3")
    # A lone simple root is not upper-closed.
    with pytest.raises(InvalidIdeal):
        generators(a3, AbelianIdeal(1))
    with pytest.raises(InvalidIdeal):
        ideal_from_roots(a3, list(a3.positive_roots))


@pytest.mark.parametrize("text", ["A3", "B3", "C3", "D4", "G2", "F4"])
def test_generators_form_antichain_and_regenerate(text):
    rs = rs_of(text)
    for ideal in enumerate_abelian_ideals(rs):
        gens = generators(rs, ideal)
        for a, b in itertools.permutations(gens, 2):
            assert not all(y >= x for x, y in zip(a.coeffs, b.coeffs))
        assert upper_closure(rs, gens) == ideal


@pytest.mark.parametrize("text", ["A3", "C3", "D4", "F4", "E6"])
def test_enumerated_ideals_pass_definitional_check(text):
    rs = rs_of(text)
    for ideal in enumerate_abelian_ideals(rs):
        assert is_abelian_upper_ideal(rs, roots_of(rs, ideal))


def test_covering_polynomials():
    assert upper_covering_polynomial(rs_of("A3")).coeffs == (1, 6, 1)
    assert upper_covering_polynomial(rs_of("F4")).coeffs == (1, 10, 5)
    assert upper_covering_polynomial(rs_of("E7")).coeffs == (1, 34, 60, 30, 3)


def c_epsilon(n, coeffs):
    eps = [coeffs[j] - (coeffs[j - 1] if j else 0) for j in range(n - 1)]
    eps.append(2 * coeffs[n - 1] - (coeffs[n - 2] if n > 1 else 0))
    return eps


@pytest.mark.parametrize("n", [2, 3, 4])
def test_c_series_maximal_ideal(n):
    rs = rs_of(f"C{n}")
    ideals = enumerate_abelian_ideals(rs)
    top = max(ideals, key=lambda i: i.size)
    maximal = [i for i in ideals if not any(
        j != i and i.mask & j.mask == i.mask for j in ideals
    )]
    assert maximal == [top]
    assert all(ideal.mask & top.mask == ideal.mask for ideal in ideals)
    expected = {
        r.coeffs
        for r in rs.positive_roots
        if sorted(c_epsilon(n, r.coeffs)) in ([0] * (n - 1) + [2], [0] * (n - 2) + [1, 1])
    }
    assert {r.coeffs for r in roots_of(rs, top)} == expected
    assert top.size == n * (n + 1) // 2
