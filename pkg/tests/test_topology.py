from fractions import Fraction

import pytest

from coloredext.characters import sign_character, trivial_character
from coloredext.combinatorics import count_ninc, enumerate_ninc, enumerate_weak_compositions, wc
from coloredext.poset import FinitePoset, hat_weighted_boolean, maximal_interval, open_interval
from coloredext.topology import (
    ascent_free_betti_check,
    enumerate_chains,
    hat_betti,
    interval_betti,
    order_complex,
    reduced_betti,
    top_cohomology_character,
    whitney_recursion_check,
)


def _open_max(mu):
    p = maximal_interval(mu)
    return open_interval(p, p.bottom, p.top)


def test_empty_open_interval():
    c = order_complex(_open_max(wc(1)))
    assert c.basis == {-1: [()]}
    assert reduced_betti(c) == {-1: 1}


def test_length_two_interval_gives_points():
    c = order_complex(_open_max(wc(1, 1)))
    assert len(c.basis[0]) == 4 and 1 not in c.basis
    assert reduced_betti(c) == {-1: 0, 0: 3}


def test_chain_dimensions_and_boundary_squares():
    for mu in [wc(2, 1), wc(1, 1, 1), wc(2, 2)]:
        c = order_complex(_open_max(mu))
        for d, chains in c.basis.items():
            assert all(len(ch) == d + 1 for ch in chains)
        assert c.squares_to_zero()
        assert c.coboundary_squares_to_zero()


def test_enumerate_chains_of_small_poset():
    p = FinitePoset("abc", [(0, 1), (0, 2)])
    chains = enumerate_chains(p)
    assert chains[0] == [(0,), (1,), (2,)]
    assert sorted(chains[1]) == [(0, 1), (0, 2)]


@pytest.mark.parametrize("mu", [mu for n in range(1, 6) for mu in enumerate_weak_compositions(n, 3)
                                if len(mu.compressed()) <= 2 or n <= 4])
def test_betti_concentrated_in_top_degree(mu):
    n = mu.size
    betti = interval_betti(mu)
    assert betti[n - 2] == count_ninc(mu)
    assert all(b == 0 for d, b in betti.items() if d != n - 2)


@pytest.mark.parametrize("n", range(1, 5))
def test_hat_betti_counts_ninc_with_last_color_not_one(n):
    expected = 0
    for mu in enumerate_weak_compositions(n, 2):
        expected += sum(1 for s in enumerate_ninc(mu) if s.colors[-1] != 1)
    betti = hat_betti(n, [1, 2])
    assert betti[n - 1] == expected
    assert all(b == 0 for d, b in betti.items() if d != n - 1)


@pytest.mark.parametrize("n", range(0, 4))
def test_ascent_free_chains_count_betti_on_every_interval(n):
    r = ascent_free_betti_check(hat_weighted_boolean(n, [1, 2]))
    assert r.passed, r.witnesses


def test_single_color_character_is_sign():
    for n in range(2, 6):
        assert top_cohomology_character(wc(n)) == sign_character(n)


def test_mu11_character():
    chi = top_cohomology_character(wc(1, 1))
    assert chi[(1, 1)] == 3 and chi[(2,)] == -1


def test_degenerate_conventions():
    assert top_cohomology_character(wc()).values == {(): Fraction(1)}
    assert top_cohomology_character(wc(1)) == trivial_character(1)
    assert top_cohomology_character(wc(0, 1)) == trivial_character(1)


@pytest.mark.parametrize("mu", [mu for n in range(2, 5) for mu in enumerate_weak_compositions(n, 3)])
def test_character_degree_and_genuineness(mu):
    chi = top_cohomology_character(mu)
    assert chi.degree == count_ninc(mu)
    assert chi.is_character()


def test_character_constant_under_rearrangement():
    assert top_cohomology_character(wc(2, 1)) == top_cohomology_character(wc(1, 2))
    assert top_cohomology_character(wc(2, 1, 1)) == top_cohomology_character(wc(1, 0, 1, 2))


def test_whitney_small_cases():
    assert whitney_recursion_check(wc()).passed
    r = whitney_recursion_check(wc(1))
    assert r.passed and r.details["terms"] == 2


@pytest.mark.parametrize("mu", [mu for n in range(0, 5) for mu in enumerate_weak_compositions(n, 2)])
def test_whitney_recursion(mu):
    assert whitney_recursion_check(mu).passed
