from fractions import Fraction
from itertools import permutations
from math import factorial, prod

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coloredext.characters import irreducible, sign_character, trivial_character
from coloredext.combinatorics import compositions, eulerian_polynomial, partitions
from coloredext.polynomial import PolynomialT
from coloredext.symfunc import (
    DoubleSeries,
    SymmetricFunction,
    TSymmetricFunction,
    assemble_lhs_series,
    basis_to_monomial,
    e,
    explicit_rhs_series,
    exponential_inverse_E2,
    frobenius,
    from_basis,
    gessel_check,
    h,
    hook_schur,
    htoe_check,
    invert_double_series,
    invert_t_series,
    koszul_dual_series,
    kostka,
    m,
    monomial_product,
    multiply,
    p,
    p1_power,
    product_order_alphabet,
    regular_rep_check,
    riordan_expansion,
    s,
    schur_expansion_y,
    specialize_E1,
    specialize_E2,
    specialize_E2_double,
    to_basis,
)

t = PolynomialT.t()


def evaluate(f: SymmetricFunction, xs) -> Fraction:
    """Evaluate at a point by summing each monomial over its distinct rearrangements."""
    total = Fraction(0)
    for lam, c in f.coeffs.items():
        padded = tuple(lam) + (0,) * (len(xs) - len(lam))
        for exps in set(permutations(padded)):
            total += c * prod(x**a for x, a in zip(xs, exps))
    return total


def test_basis_examples():
    assert h(1) == e(1) == p(1) == s(1) == m(1)
    assert h(2) == m(2) + m(1, 1)
    assert e(2) == m(1, 1)
    assert s(2, 1) == m(2, 1) + m(1, 1, 1).scale(2)
    with pytest.raises(ValueError):
        basis_to_monomial("q", (1,))
    with pytest.raises(ValueError):
        basis_to_monomial("h", (3,), N=2)


def test_kostka_values():
    assert kostka((2, 1), (1, 1, 1)) == 2
    assert kostka((3,), (1, 1, 1)) == 1
    assert kostka((2, 2), (2, 1, 1)) == 1
    assert kostka((1, 1), (2,)) == 0


def test_multiply_examples():
    f = s(2, 1, N=4)
    assert f * SymmetricFunction.one(4) == f
    assert multiply(h(1, N=2), h(1, N=2)) == h(2) + e(2)
    with pytest.raises(ValueError):
        h(1, N=2) + h(1, N=3)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([lam for n in range(4) for lam in partitions(n)]),
       st.sampled_from([lam for n in range(4) for lam in partitions(n)]),
       st.lists(st.integers(-3, 3), min_size=6, max_size=6))
def test_monomial_product_against_evaluation(lam, mu, xs):
    N = 6
    prod_f = SymmetricFunction(monomial_product(lam, mu), N)
    assert evaluate(prod_f, xs) == evaluate(m(*lam, N=N), xs) * evaluate(m(*mu, N=N), xs)


@pytest.mark.parametrize("basis", ["e", "h", "p", "s"])
@pytest.mark.parametrize("n", range(0, 9))
def test_basis_round_trip(basis, n):
    for lam in partitions(n):
        f = m(*lam, N=n)
        assert from_basis(basis, to_basis(f, basis), n) == f


def test_hook_schur_examples():
    for n in range(1, 6):
        assert hook_schur((n,)) == h(n)
        assert hook_schur((1,) * n) == e(n)
    assert hook_schur((1, 2)) == s(2, 1)


@pytest.mark.parametrize("n", range(0, 7))
def test_hook_schur_sum_is_regular_representation(n):
    total = SymmetricFunction({}, n)
    for alpha in compositions(n):
        total = total + (hook_schur(alpha, n) if alpha else SymmetricFunction.one(n))
    assert total == p1_power(n) == p(*(1,) * n, N=n)


def test_frobenius_examples():
    for n in range(1, 6):
        assert frobenius(trivial_character(n)) == h(n)
        assert frobenius(sign_character(n)) == e(n)
    for lam in partitions(4):
        assert frobenius(irreducible(lam)) == s(*lam)


def test_double_series_inverse_low_degrees():
    assert invert_double_series(DoubleSeries.one(3)) == DoubleSeries.one(3)
    G = invert_double_series(koszul_dual_series(3))
    assert G.grade(1) == DoubleSeries.tensor(h(1, N=3), h(1, N=3), 3)
    expected = (DoubleSeries.tensor(e(2, N=3), s(2, N=3), 3)
                + DoubleSeries.tensor(h(2, N=3) + e(2, N=3), s(1, 1, N=3), 3))
    assert G.grade(2) == expected
    assert G * koszul_dual_series(3) == DoubleSeries.one(3)
    with pytest.raises(ValueError):
        invert_double_series(DoubleSeries({((), ()): 2}, 2))


def test_explicit_rhs_degree_two():
    rhs = explicit_rhs_series(2)
    expected = (DoubleSeries.tensor(e(2, N=2), s(2, N=2), 2)
                + DoubleSeries.tensor(e(1, 1, N=2), s(1, 1, N=2), 2))
    assert rhs.grade(2) == expected
    assert rhs.grade(1) == DoubleSeries.tensor(e(1, N=2), s(1, N=2), 2)


def test_assembled_series_small():
    lhs = assemble_lhs_series(1, 1)
    assert lhs == DoubleSeries.one(1) + DoubleSeries.tensor(e(1, N=1), s(1, N=1), 1)
    with pytest.raises(ValueError):
        assemble_lhs_series(3, 2)


@pytest.mark.parametrize("n_max", range(0, 5))
def test_three_way_series_identity(n_max):
    lhs = assemble_lhs_series(n_max, max(n_max, 1))
    inverse = invert_double_series(koszul_dual_series(n_max))
    assert lhs == inverse == explicit_rhs_series(n_max)
    schur = schur_expansion_y(lhs)
    assert all(Fraction(v).denominator == 1 and v > 0 for v in schur.values())


def test_double_series_json():
    rows = explicit_rhs_series(1).to_json()
    assert rows == [
        {"x_partition": [], "y_partition": [], "numerator": 1, "denominator": 1},
        {"x_partition": [1], "y_partition": [1], "numerator": 1, "denominator": 1},
    ]


def test_specialize_E1():
    for n in range(1, 6):
        assert specialize_E1(h(n))[n] == Fraction(1, factorial(n))
        assert specialize_E1(e(n))[n] == Fraction(1, factorial(n))
    assert specialize_E1(p(2)) == [0, 0, 0]


def test_specialize_E2():
    assert specialize_E2(e(3, 2, 1)) == t**3
    for n in range(1, 9):
        assert specialize_E2(h(n)) == t * (t - 1) ** (n - 1)


def test_riordan_and_exponential_inverse_agree_with_eulerian():
    r = riordan_expansion(8)
    assert r[0] == PolynomialT([1])
    assert r[3] == t + 4 * t**2 + t**3
    assert all(r[n] == eulerian_polynomial(n) for n in range(1, 9))
    assert exponential_inverse_E2(8) == r


def test_E2_of_inverse_is_inverse_of_E2():
    N = 4
    F = koszul_dual_series(N)
    lhs = specialize_E2_double(invert_double_series(F))
    rhs = invert_t_series(specialize_E2_double(F))
    assert lhs == rhs
    expected = TSymmetricFunction({(): PolynomialT([1])}, N)
    for n in range(1, N + 1):
        for alpha in compositions(n):
            expected = expected + TSymmetricFunction.lift(hook_schur(alpha, N), t ** len(alpha))
    assert lhs == expected
    # t = 1 gives the regular representation in each degree
    for n in range(N + 1):
        at_one = {lam: v(1) for lam, v in lhs.homogeneous(n).coeffs.items()}
        assert SymmetricFunction(at_one, N) == p1_power(n, N)


def test_gessel_examples():
    assert gessel_check(["a"], lambda u, v: True, 6).passed
    assert gessel_check([1, 2], lambda u, v: u <= v, 4).passed
    r = gessel_check(*product_order_alphabet(2, 2), 5)
    assert r.passed and r.details["words_checked"] == sum(4**j for j in range(6))


def test_regular_rep_and_htoe():
    assert regular_rep_check(6).passed
    assert htoe_check(8).passed
