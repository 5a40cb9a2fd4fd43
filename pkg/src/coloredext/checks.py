"""One function per verified identity; each returns a CheckReport.

The CLI suites and the acceptance tests both call these, with budgets passed
in explicitly.
"""

from __future__ import annotations

import time
from collections import Counter
from fractions import Fraction
from itertools import permutations
from math import factorial

from .algebra import (
    build_exterior_module,
    build_symmetric_module,
    character_exterior_cached,
    presentation_comparison,
)
from .characters import trivial_character
from .combinatorics import (
    WeakComposition,
    count_colored_permutations,
    count_ninc,
    enumerate_ninc,
    enumerate_weak_compositions,
    eulerian_polynomial,
    partitions,
    type_partition,
)
from .polynomial import PolynomialT
from .poset import hat_weighted_boolean, maximal_interval, mobius, verify_el_labeling
from .report import CheckReport
from .symfunc import (
    DoubleSeries,
    SymmetricFunction,
    assemble_lhs_series,
    basis_to_monomial,
    exponential_product,
    explicit_rhs_series,
    gessel_check,
    htoe_check,
    invert_double_series,
    koszul_dual_series,
    product_order_alphabet,
    regular_rep_check,
    riordan_expansion,
    schur_expansion_y,
    specialize_E1,
    specialize_E2,
)
from .topology import (
    ascent_free_betti_check,
    interval_betti,
    top_cohomology_character,
    whitney_recursion_check,
)


def _timed(fn):
    def wrapper(*args, **kwargs):
        start = time.perf_counter()
        report = fn(*args, **kwargs)
        report.wall_time = time.perf_counter() - start
        return report

    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


def _compositions_up_to(n_max: int, k: int, start: int = 1) -> list[WeakComposition]:
    out = []
    for n in range(start, n_max + 1):
        out.extend(enumerate_weak_compositions(n, k))
    return out


@_timed
def check_el(n_max: int = 4, k_max: int = 2) -> CheckReport:
    """Every closed interval of B^_n^[k] has one increasing maximal chain, lexicographically first."""
    witnesses, details = [], {}
    for n in range(n_max + 1):
        for k in range(1, k_max + 1):
            r = verify_el_labeling(hat_weighted_boolean(n, range(1, k + 1)))
            details[f"n={n},k={k}"] = {"intervals": r.details["intervals"], "verdict": r.verdict,
                                       "tie_break_sensitive": len(r.details["tie_break_sensitive"])}
            if not r.passed:
                witnesses.append({"n": n, "k": k, "witnesses": r.witnesses[:3]})
    return CheckReport("el_shellability", {"n_max": n_max, "k_max": k_max}, not witnesses, witnesses, details)


@_timed
def check_ascent_free_betti(n_max: int = 4, k_max: int = 2) -> CheckReport:
    """Ascent-free maximal chains count the top reduced Betti number on every interval of B^_n^[k]."""
    witnesses, intervals = [], 0
    for n in range(n_max + 1):
        for k in range(1, k_max + 1):
            r = ascent_free_betti_check(hat_weighted_boolean(n, range(1, k + 1)))
            intervals += r.details["intervals"]
            if not r.passed:
                witnesses.append({"n": n, "k": k, "witnesses": r.witnesses[:3]})
    return CheckReport("ascent_free_betti", {"n_max": n_max, "k_max": k_max}, not witnesses, witnesses,
                       {"intervals": intervals})


def dimension_row(mu: WeakComposition) -> tuple[int, int, int, dict]:
    """(|Ninc_mu| by enumeration, dim L(mu) by rank-nullity, top betti, full betti table)."""
    enumerated = len(enumerate_ninc(mu))
    m = build_exterior_module(mu)
    rank_nullity = count_colored_permutations(mu) - m.rank
    betti = interval_betti(mu)
    return enumerated, rank_nullity, betti[mu.size - 2], betti


@_timed
def check_dimensions(n_max: int = 5, k: int = 3) -> CheckReport:
    """|Ninc_mu| = |S_mu| - rank(relations) = top reduced betti, lower betti zero."""
    witnesses, rows = [], 0
    for mu in _compositions_up_to(n_max, k):
        enumerated, dim, top, betti = dimension_row(mu)
        lower = {d: b for d, b in betti.items() if d != mu.size - 2 and b}
        dp = count_ninc(mu)
        rows += 1
        if not (enumerated == dp == dim == top) or lower:
            witnesses.append({"mu": mu.to_json(), "ninc": enumerated, "ninc_dp": dp, "rank_nullity": dim,
                              "top_betti": top, "lower_betti": lower})
    return CheckReport("dimensions", {"n_max": n_max, "k": k}, not witnesses, witnesses, {"rows": rows})


@_timed
def check_mobius(n_max: int = 5, k: int = 3) -> CheckReport:
    """mu(0, [n]^mu) = (-1)^n |Ninc_mu|."""
    witnesses, rows = [], 0
    for mu in _compositions_up_to(n_max, k):
        P = maximal_interval(mu)
        value = mobius(P, P.bottom, P.top)
        expected = (-1) ** mu.size * count_ninc(mu)
        rows += 1
        if value != expected:
            witnesses.append({"mu": mu.to_json(), "mobius": value, "expected": expected})
    return CheckReport("mobius", {"n_max": n_max, "k": k}, not witnesses, witnesses, {"rows": rows})


@_timed
def check_characters(n_max: int = 4) -> CheckReport:
    """Exterior-module character equals the top-cohomology character, class by class."""
    witnesses, compared = [], 0
    for mu in _compositions_up_to(n_max, n_max):
        a = character_exterior_cached(mu)
        b = top_cohomology_character(mu)
        compared += 1
        if a != b or not a.is_character():
            witnesses.append({"mu": mu.to_json(), "exterior": a.to_json(), "cohomology": b.to_json()})
    return CheckReport("characters", {"n_max": n_max}, not witnesses, witnesses, {"compared": compared})


@_timed
def check_presentation(n_max: int = 3) -> CheckReport:
    """Exterior relations and coboundary relations of top cohomology span the same space."""
    witnesses, rows = [], 0
    for mu in _compositions_up_to(n_max, n_max):
        r = presentation_comparison(mu)
        rows += 1
        if not r.passed:
            witnesses.append({"mu": mu.to_json(), **r.details})
    return CheckReport("presentation", {"n_max": n_max}, not witnesses, witnesses, {"rows": rows})


@_timed
def check_symmetric_modules(n_max: int = 4) -> CheckReport:
    """S(mu) is one-dimensional with trivial character."""
    witnesses, rows = [], 0
    for mu in _compositions_up_to(n_max, n_max):
        m = build_symmetric_module(mu)
        chi = m.character()
        rows += 1
        if m.dimension != 1 or chi != trivial_character(mu.size):
            witnesses.append({"mu": mu.to_json(), "dimension": m.dimension, "character": chi.to_json()})
    return CheckReport("symmetric_module", {"n_max": n_max}, not witnesses, witnesses, {"rows": rows})


@_timed
def check_series(n_max: int = 5) -> CheckReport:
    """Assembled characteristics = inverse of sum (-1)^n h_n h_n = sum of e_sort(alpha) s_H(alpha)."""
    lhs = assemble_lhs_series(n_max, n_max)
    inverse = invert_double_series(koszul_dual_series(n_max), n_max)
    rhs = explicit_rhs_series(n_max)
    witnesses = []
    for tag, (a, b) in {"lhs-inverse": (lhs, inverse), "inverse-rhs": (inverse, rhs)}.items():
        d = a.diff(b)
        if d:
            witnesses.append({"pair": tag, "differences": {str(k): str(v) for k, v in sorted(d.items())[:10]}})
    if inverse * koszul_dual_series(n_max) != DoubleSeries.one(n_max):
        witnesses.append({"pair": "F*G", "reason": "product is not 1"})
    schur = schur_expansion_y(lhs)
    bad = {str(k): str(v) for k, v in schur.items() if Fraction(v).denominator != 1 or v < 0}
    if bad:
        witnesses.append({"non_integral_or_negative_schur": bad})
    return CheckReport("series_identity", {"n_max": n_max}, not witnesses, witnesses,
                       {"terms": len(lhs.coeffs), "schur_terms": len(schur)})


def type_sum(n: int, N: int) -> SymmetricFunction:
    """sum over tau in S_n of e_{type(tau)}, in the monomial basis."""
    counts = Counter(type_partition(tau) for tau in permutations(range(1, n + 1)))
    out = SymmetricFunction({}, N)
    for lam, c in sorted(counts.items()):
        out = out + basis_to_monomial("e", lam, N).scale(c)
    return out


@_timed
def check_dimension_series(n_max: int = 6) -> CheckReport:
    """sum_mu dim x^mu = sum_tau e_type(tau), and its E_1 product with sum (-1)^n h_n y^n/n! is 1.

    Dimensions come from the poset, as (-1)^n times the Moebius value of
    [0, [n]^lam], and are cross-checked against |Ninc_lam| counted directly.
    """
    N = n_max
    witnesses = []
    grades = []
    for n in range(n_max + 1):
        dims = {}
        for lam in partitions(n):
            P = maximal_interval(WeakComposition(lam))
            dims[lam] = (-1) ** n * mobius(P, P.bottom, P.top) if n else 1
            if dims[lam] != count_ninc(WeakComposition(lam)):
                witnesses.append({"lambda": list(lam), "moebius_dim": dims[lam]})
        dims = SymmetricFunction(dims, N)
        types = type_sum(n, N)
        if dims != types:
            witnesses.append({"n": n, "reason": "dimension series differs from type sum"})
        grades.append(dims)
    signed_h = [basis_to_monomial("h", (n,) if n else (), N).scale((-1) ** n) for n in range(n_max + 1)]
    product = exponential_product(grades, signed_h, n_max)
    for n, f in enumerate(product):
        expected = SymmetricFunction.one(N) if n == 0 else SymmetricFunction({}, N)
        if f != expected:
            witnesses.append({"n": n, "reason": "exponential product is not 1"})
    # E_1 on the y-side of the graded pieces: dimension / n!
    e1 = [specialize_E1(basis_to_monomial("h", (n,) if n else (), N))[n] for n in range(n_max + 1)]
    if e1 != [Fraction(1, factorial(n)) for n in range(n_max + 1)]:
        witnesses.append({"reason": "E_1(h_n) != y^n/n!", "values": [str(v) for v in e1]})
    return CheckReport("dimension_series", {"n_max": n_max}, not witnesses, witnesses)


@_timed
def check_specializations(h_max: int = 8, euler_max: int = 7) -> CheckReport:
    """E_2(h_n) = t(t-1)^(n-1); Riordan coefficients = A_n(t); E_2(sum e_type) = A_n(t)."""
    t = PolynomialT.t()
    witnesses = []
    for n in range(1, h_max + 1):
        got = specialize_E2(basis_to_monomial("h", (n,), n))
        if got != t * (t - 1) ** (n - 1):
            witnesses.append({"n": n, "E2(h_n)": repr(got)})
    riordan = riordan_expansion(h_max)
    if riordan[0] != PolynomialT([1]):
        witnesses.append({"n": 0, "riordan": repr(riordan[0])})
    for n in range(1, h_max + 1):
        if riordan[n] != eulerian_polynomial(n):
            witnesses.append({"n": n, "riordan": repr(riordan[n]), "eulerian": repr(eulerian_polynomial(n))})
    for n in range(1, euler_max + 1):
        got = specialize_E2(type_sum(n, n))
        if got != eulerian_polynomial(n):
            witnesses.append({"n": n, "E2(type sum)": repr(got)})
    return CheckReport("specializations", {"h_max": h_max, "euler_max": euler_max}, not witnesses, witnesses)


@_timed
def check_regular_representation(n_max: int = 6) -> CheckReport:
    return regular_rep_check(n_max)


@_timed
def check_gessel(colors: int = 2, letters: int = 2, max_length: int = 5) -> CheckReport:
    return gessel_check(*product_order_alphabet(letters, colors), max_length)


@_timed
def check_whitney(n_max: int = 4, k: int = 2) -> CheckReport:
    witnesses, rows = [], 0
    for mu in _compositions_up_to(n_max, k, start=0):
        r = whitney_recursion_check(mu)
        rows += 1
        if not r.passed:
            witnesses.extend(r.witnesses)
    return CheckReport("whitney_recursion", {"n_max": n_max, "k": k}, not witnesses, witnesses, {"rows": rows})


@_timed
def check_htoe(n_max: int = 8) -> CheckReport:
    return htoe_check(n_max)
