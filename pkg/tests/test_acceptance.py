"""Acceptance criteria 1-12, each at its stated budget with exact equality.

Every test records a PASS/FAIL line; the lines are printed in the pytest
terminal summary (see conftest.py) and when this file is run as a script.
"""

import sys

import pytest

from coloredext import checks
from coloredext.combinatorics import wc
from coloredext.poset import build_weighted_boolean

RESULTS: dict[int, str] = {}

CRITERIA = {
    1: "EL-labeling of B^_n^[k], n <= 4, k <= 2",
    2: "|Ninc| = rank-nullity dim = top betti (lower betti 0), |mu| <= 5, supp in [3]",
    3: "exterior character = top cohomology character, |mu| <= 4",
    4: "Moebius(0, [n]^mu) = (-1)^n |Ninc_mu|, |mu| <= 5, supp in [3]",
    5: "assembled series = inverse of sum (-1)^n h_n h_n = explicit hook series, degree 5; Schur-positive",
    6: "dimension series = sum of e_type, E_1 product = 1, n <= 6",
    7: "E_2(h_n), Riordan vs Eulerian (n <= 8), E_2(sum e_type) = A_n (n <= 7)",
    8: "sum of hook Schur functions = h_1^n = degree-n part of (1 - h_1)^-1, n <= 6",
    9: "per-word inversion over [2]x[2], length <= 5",
    10: "Whitney recursion, |mu| <= 4, supp in [2]",
    11: "h_n = (-1)^n sum (-1)^len(nu) e_nu, n <= 8",
    12: "S(mu) one-dimensional and trivial, |mu| <= 4",
}


def record(number: int, report) -> None:
    line = f"criterion {number:2d}: {report.verdict}  {CRITERIA[number]}  ({report.wall_time:.1f}s)"
    RESULTS[number] = line
    print(line)
    assert report.passed, report.witnesses


def test_criterion_01_el_shellability():
    assert len(build_weighted_boolean(3, [1, 2])) == 20
    record(1, checks.check_el(n_max=4, k_max=2))


def test_criterion_02_dimension_agreement():
    assert checks.dimension_row(wc(1, 1))[:3] == (3, 3, 3)
    assert checks.dimension_row(wc(2))[:3] == (1, 1, 1)
    record(2, checks.check_dimensions(n_max=5, k=3))


def test_criterion_03_character_equality():
    record(3, checks.check_characters(n_max=4))


def test_criterion_04_mobius():
    record(4, checks.check_mobius(n_max=5, k=3))


def test_criterion_05_series_identity():
    record(5, checks.check_series(n_max=5))


def test_criterion_06_dimension_series():
    record(6, checks.check_dimension_series(n_max=6))


def test_criterion_07_specializations():
    record(7, checks.check_specializations(h_max=8, euler_max=7))


def test_criterion_08_regular_representation():
    record(8, checks.check_regular_representation(n_max=6))


def test_criterion_09_gessel():
    record(9, checks.check_gessel(colors=2, letters=2, max_length=5))


def test_criterion_10_whitney():
    record(10, checks.check_whitney(n_max=4, k=2))


def test_criterion_11_h_to_e():
    record(11, checks.check_htoe(n_max=8))


def test_criterion_12_symmetric_module():
    record(12, checks.check_symmetric_modules(n_max=4))


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
