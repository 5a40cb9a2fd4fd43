from itertools import permutations
from math import comb

import pytest

from coloredext.combinatorics import (
    ColoredPermutation,
    WeakComposition,
    count_colored_permutations,
    count_ninc,
    enumerate_colored_permutations,
    enumerate_ninc,
    enumerate_weak_compositions,
    is_colored_ascent,
    wc,
)
from coloredext.poset import (
    TOP,
    EdgeLabel,
    FinitePoset,
    WeightedSubset,
    add_top,
    ascent_free_maximal_chains,
    bottom_element,
    build_weighted_boolean,
    chain_from_permutation,
    closed_interval,
    el_label,
    from_json,
    hat_weighted_boolean,
    interval_translation_check,
    maximal_chains,
    maximal_interval,
    mobius,
    open_interval,
    permutation_from_chain,
    product_lt,
    to_dot,
    to_json,
    verify_el_labeling,
)

P = ColoredPermutation.parse


def ws(base, *weight):
    return WeightedSubset(tuple(base), WeakComposition(weight))


def test_b3_two_colors():
    p = build_weighted_boolean(3, [1, 2])
    assert len(p) == 20
    assert len(p.maximal()) == 4
    assert p.elements[p.bottom] == bottom_element()
    assert {p.elements[i].weight for i in p.maximal()} == set(enumerate_weak_compositions(3, 2))


def test_trivial_and_one_color_cases():
    assert len(build_weighted_boolean(0, [1, 2])) == 1
    for n in range(5):
        p = build_weighted_boolean(n, [1])
        assert len(p) == 2**n
        assert len(p.covers) == n * 2 ** (n - 1) if n else not p.covers
    with pytest.raises(ValueError):
        build_weighted_boolean(2, [])


@pytest.mark.parametrize("n", range(6))
@pytest.mark.parametrize("S", [[1], [1, 2], [2, 3], [1, 2, 3]])
def test_element_count_is_fiber_product(n, S):
    p = build_weighted_boolean(n, S)
    expected = sum(comb(n, j) * comb(j + len(S) - 1, len(S) - 1) for j in range(n + 1))
    assert len(p) == expected
    assert p.is_graded()


def test_order_agrees_with_componentwise_definition():
    p = build_weighted_boolean(3, [1, 2])
    for a in p.elements:
        for b in p.elements:
            assert p.leq(a, b) == a.leq(b)


def test_add_top():
    p = add_top(build_weighted_boolean(3, [1, 2]))
    assert len(p) == 21
    assert p.elements[p.top] is TOP
    assert len(p.down[p.top]) == 4
    single = add_top(FinitePoset(["x"], []))
    assert len(single) == 2 and single.covers == [(0, 1)]
    assert len(add_top(build_weighted_boolean(3, [1])).down[-1]) == 1


def test_closed_and_open_intervals():
    p = build_weighted_boolean(3, [1, 2])
    top = ws((1, 2, 3), 2, 1)
    q = closed_interval(p, bottom_element(), top)
    assert q.length() == 3 and q.is_graded()
    a = ws((1,), 1)
    assert len(closed_interval(p, a, a)) == 1
    with pytest.raises(ValueError):
        closed_interval(p, ws((1,), 0, 1), ws((1, 2), 2))
    o = open_interval(maximal_interval(wc(1, 1)), bottom_element(), ws((1, 2), 1, 1))
    assert len(o) == 4 and not o.covers


@pytest.mark.parametrize("mu", [mu for n in range(1, 5) for mu in enumerate_weak_compositions(n, 3)])
def test_maximal_chains_biject_with_colored_permutations(mu):
    q = maximal_interval(mu)
    chains = maximal_chains(q)
    words = [permutation_from_chain(c) for c in chains]
    assert len(chains) == count_colored_permutations(mu)
    assert sorted(words) == enumerate_colored_permutations(mu)
    for sigma in words:
        assert permutation_from_chain(chain_from_permutation(sigma)) == sigma


def test_el_label_examples():
    assert el_label(bottom_element(), ws((2,), 1)) == EdgeLabel(2, 1)
    assert el_label(ws((2,), 1), ws((1, 2), 1, 0, 0, 1)) == EdgeLabel(1, 4)
    assert el_label(ws((1, 2, 3), 1, 2), TOP) == EdgeLabel(4, 1)
    with pytest.raises(ValueError):
        el_label(bottom_element(), ws((1, 2), 2))
    with pytest.raises(ValueError):
        el_label(ws((1,), 1), ws((1, 2), 0, 2))


def test_chain_from_permutation_worked_example():
    chain = chain_from_permutation(P("2^1 1^4 3^2"))
    assert chain == [bottom_element(), ws((2,), 1), ws((1, 2), 1, 0, 0, 1), ws((1, 2, 3), 1, 1, 0, 1)]


def test_label_predicates_agree_on_chains():
    # on label words of chains, letters are distinct, so "strictly below in the
    # product order" and "colored ascent" coincide
    for mu in enumerate_weak_compositions(3, 3):
        for sigma in enumerate_colored_permutations(mu):
            for a, b in zip(sigma.word, sigma.word[1:]):
                assert product_lt(EdgeLabel(*a), EdgeLabel(*b)) == is_colored_ascent(a, b)


def test_ascent_free_chains_of_maximal_interval():
    q = maximal_interval(wc(1, 1))
    words = {permutation_from_chain(c) for c in ascent_free_maximal_chains(q)}
    assert words == {P("1^2 2^1"), P("2^1 1^2"), P("2^2 1^1")}
    q = maximal_interval(wc(4))
    (only,) = ascent_free_maximal_chains(q)
    assert permutation_from_chain(only) == P("4^1 3^1 2^1 1^1")
    for mu in enumerate_weak_compositions(4, 2):
        words = sorted(permutation_from_chain(c) for c in ascent_free_maximal_chains(maximal_interval(mu)))
        assert words == enumerate_ninc(mu)


@pytest.mark.parametrize("n", range(1, 5))
@pytest.mark.parametrize("k", [1, 2, 3])
def test_ascent_free_chains_of_hat_poset(n, k):
    p = hat_weighted_boolean(n, range(1, k + 1))
    got = sorted(permutation_from_chain(c) for c in ascent_free_maximal_chains(p))
    expected = sorted(s for mu in enumerate_weak_compositions(n, k) for s in enumerate_ninc(mu)
                      if s.colors[-1] != 1)
    assert got == expected


def test_hat_b2_two_colors_has_two_ascent_free_chains():
    p = hat_weighted_boolean(2, [1, 2])
    words = {permutation_from_chain(c) for c in ascent_free_maximal_chains(p)}
    assert words == {P("2^1 1^2"), P("2^2 1^2")}


@pytest.mark.parametrize("n", range(5))
@pytest.mark.parametrize("k", [1, 2])
def test_el_labeling_of_hat_poset(n, k):
    r = verify_el_labeling(hat_weighted_boolean(n, range(1, k + 1)))
    assert r.passed, r.witnesses
    assert r.details["tie_break_sensitive"] == []


def test_el_labeling_of_two_chain():
    p = FinitePoset([ws((), ), TOP], [(0, 1)])
    assert verify_el_labeling(p).passed


def test_corrupted_labeling_fails_with_witness():
    p = hat_weighted_boolean(2, [1, 2])
    a, b = ws((1,), 1), ws((1, 2), 2)

    def corrupted(x, y):
        lab = el_label(x, y)
        if x == bottom_element() and y == a:
            return EdgeLabel(2, 2)
        if x == a and y == b:
            return EdgeLabel(1, 1)
        return lab

    r = verify_el_labeling(p, corrupted)
    assert not r.passed
    assert r.witnesses and "interval" in r.witnesses[0]


def test_mobius_examples():
    p = maximal_interval(wc(1, 1))
    assert mobius(p, p.bottom, p.bottom) == 1
    assert mobius(p, p.bottom, p.top) == 3
    for n in range(1, 6):
        for mu in enumerate_weak_compositions(n, 3):
            q = maximal_interval(mu)
            assert mobius(q, q.bottom, q.top) == (-1) ** n * count_ninc(mu)


def test_interval_translation():
    p = build_weighted_boolean(4, [1, 2])
    assert interval_translation_check(p, ws((2,), 0, 1), ws((1, 2, 4), 1, 2))
    assert interval_translation_check(p, ws((), ), ws((1, 3), 1, 1))


def test_group_action_maps_covers_to_covers_and_commutes_with_chains():
    p = build_weighted_boolean(3, [1, 2])
    covers = {(p.elements[i], p.elements[j]) for i, j in p.covers}
    for tau in permutations((1, 2, 3)):
        for x, y in covers:
            assert (x.act(tau), y.act(tau)) in covers
            assert el_label(x.act(tau), y.act(tau)).color == el_label(x, y).color
        for sigma in enumerate_colored_permutations(wc(2, 1)):
            assert [z.act(tau) for z in chain_from_permutation(sigma)] == chain_from_permutation(sigma.act(tau))


def test_dot_export_is_deterministic():
    p = build_weighted_boolean(3, [1, 2])
    text = to_dot(p)
    assert text == to_dot(build_weighted_boolean(3, [1, 2]))
    assert text.count("->") == len(p.covers)
    assert '"{}^()" -> "{1}^(0,1)" [label="1^2"];' in text


def test_json_round_trip():
    p = hat_weighted_boolean(2, [1, 2])
    q = from_json(to_json(p))
    assert q.elements == p.elements and q.covers == p.covers
    assert q.n == 2 and q.colors == (1, 2)
    with pytest.raises(ValueError):
        from_json('{"schema": "other"}')


def test_poset_validation():
    with pytest.raises(ValueError):
        FinitePoset(["a", "b"], [(0, 1), (1, 0)])
    with pytest.raises(ValueError):
        FinitePoset(["a", "b", "c"], [(0, 1), (1, 2), (0, 2)])
    with pytest.raises(ValueError):
        FinitePoset(["a", "a"], [])
