from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coloredext.algebra import (
    act,
    build_exterior_module,
    build_symmetric_module,
    character_exterior,
    character_exterior_cached,
    character_symmetric,
    exterior_relations,
    frobenius,
    group_law_check,
    presentation_comparison,
    straighten,
)
from coloredext.characters import sign_character, trivial_character
from coloredext.combinatorics import (
    ColoredPermutation,
    count_colored_permutations,
    count_ninc,
    enumerate_colored_permutations,
    enumerate_ninc,
    enumerate_weak_compositions,
    wc,
)
from coloredext.symfunc import h, s
from coloredext.topology import top_cohomology_character

P = ColoredPermutation.parse
SMALL = [mu for n in range(1, 5) for mu in enumerate_weak_compositions(n, 3)]


def test_single_color_module():
    m = build_exterior_module(wc(2))
    assert m.dimension == 1 and m.basis == [P("2^1 1^1")]
    assert straighten(m, P("1^1 2^1")) == {P("2^1 1^1"): -1}


def test_mu11_module_and_four_term_straightening():
    m = build_exterior_module(wc(1, 1))
    assert m.dimension == 3
    assert set(m.basis) == {P("1^2 2^1"), P("2^1 1^2"), P("2^2 1^1")}
    assert straighten(m, P("1^1 2^2")) == {P("2^2 1^1"): -1, P("2^1 1^2"): -1, P("1^2 2^1"): -1}


def test_basis_straightens_to_itself():
    for mu in SMALL:
        m = build_exterior_module(mu)
        for b in m.basis:
            assert straighten(m, b) == {b: 1}


@pytest.mark.parametrize("mu", [mu for n in range(1, 6) for mu in enumerate_weak_compositions(n, 3)])
def test_dimension_by_rank_nullity(mu):
    m = build_exterior_module(mu)
    assert count_colored_permutations(mu) - m.rank == count_ninc(mu) == m.dimension


def test_relations_straighten_to_zero():
    m = build_exterior_module(wc(2, 1))
    for sigma in enumerate_colored_permutations(wc(2, 1)):
        for rel in exterior_relations(sigma.word):
            v = m.straighten_vector({ColoredPermutation(w): c for w, c in rel.items()})
            assert v == {}


def test_action_examples():
    m = build_exterior_module(wc(1, 1))
    for b in m.basis:
        assert act(m, (1, 2), {b: 1}) == {b: 1}
    assert act(m, (2, 1), {P("2^1 1^2"): 1}) == straighten(m, P("1^1 2^2"))


@pytest.mark.parametrize("mu", [mu for n in range(1, 4) for mu in enumerate_weak_compositions(n, 3)])
def test_group_law(mu):
    assert group_law_check(mu).passed


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(SMALL), st.data())
def test_action_is_linear(mu, data):
    m = build_exterior_module(mu)
    tau = data.draw(st.permutations(range(1, mu.size + 1)))
    coeffs = data.draw(st.lists(st.integers(-3, 3), min_size=len(m.basis), max_size=len(m.basis)))
    v = {b: c for b, c in zip(m.basis, coeffs) if c}
    expected = {}
    for b, c in v.items():
        for key, x in m.act(tau, {b: 1}).items():
            expected[key] = expected.get(key, 0) + c * x
    expected = {k: x for k, x in expected.items() if x}
    assert m.act(tau, v) == expected


def test_character_examples():
    for n in range(1, 5):
        assert character_exterior(wc(n)) == sign_character(n)
    chi = character_exterior(wc(1, 1))
    assert chi[(1, 1)] == 3 and chi[(2,)] == -1
    assert frobenius(chi) == s(2) + s(1, 1).scale(2)
    assert frobenius(trivial_character(3)) == h(3)


@pytest.mark.parametrize("mu", SMALL)
def test_character_matches_cohomology(mu):
    chi = character_exterior(mu)
    assert chi == top_cohomology_character(mu)
    assert chi.degree == count_ninc(mu)
    assert chi.is_character()


def test_cached_character_ignores_zero_parts():
    assert character_exterior_cached(wc(0, 2, 0, 1)) == character_exterior(wc(2, 1))
    assert character_exterior(wc(0, 2, 1)) == character_exterior(wc(2, 1))


def test_character_constant_under_rearrangement():
    assert character_exterior(wc(2, 1)) == character_exterior(wc(1, 2))
    assert character_exterior(wc(1, 2, 1)) == character_exterior(wc(2, 1, 1))


def test_symmetric_module():
    m = build_symmetric_module(wc(1, 1))
    assert m.dimension == 1 and m.rank == 3
    for mu in SMALL:
        assert character_symmetric(mu) == trivial_character(mu.size)
        assert frobenius(character_symmetric(mu)) == h(mu.size)


@pytest.mark.parametrize("mu", [mu for n in range(1, 4) for mu in enumerate_weak_compositions(n, 3)])
def test_cohomology_presentation_matches_relations(mu):
    r = presentation_comparison(mu)
    assert r.passed, r.details


def test_wrong_content_rejected():
    m = build_exterior_module(wc(1, 1))
    with pytest.raises(ValueError):
        m.straighten(P("1^1 2^1"))
    with pytest.raises(ValueError):
        build_exterior_module(wc())
