"""Order complexes, reduced Betti numbers over Q, the S_n character of the top
cohomology of maximal intervals, and the Whitney-homology recursion."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .characters import ClassFunction, class_representative
from .combinatorics import ColoredPermutation, WeakComposition
from .linalg import Echelon, _axpy
from .combinatorics import partitions
from .poset import (
    FinitePoset,
    act_on_poset,
    ascent_free_maximal_chains,
    closed_interval,
    hat_weighted_boolean,
    maximal_interval,
    open_interval,
    permutation_from_chain,
)
from .report import CheckReport


@dataclass
class ChainComplexQ:
    """Reduced chain complex of an order complex.

    ``basis[i]`` lists the chains with i+1 elements (``basis[-1] == [()]``);
    ``boundary[i][r]`` is the sparse image of ``basis[i][r]`` in dimension i-1.
    """

    basis: dict[int, list[tuple[int, ...]]]
    boundary: dict[int, list[dict[int, int]]]

    @property
    def top_dimension(self) -> int:
        return max(self.basis)

    def squares_to_zero(self) -> bool:
        for i in self.boundary:
            if i - 1 not in self.boundary:
                continue
            for row in self.boundary[i]:
                acc: dict[int, int] = {}
                for col, v in row.items():
                    _axpy(acc, v, self.boundary[i - 1][col])
                if acc:
                    return False
        return True

    def coboundary_squares_to_zero(self) -> bool:
        """delta o delta = 0, with delta the transpose of the boundary."""
        cob: dict[int, dict[int, dict[int, int]]] = {}
        for i, rows in self.boundary.items():
            t: dict[int, dict[int, int]] = {}
            for r, row in enumerate(rows):
                for c, v in row.items():
                    t.setdefault(c, {})[r] = v
            cob[i - 1] = t  # delta_{i-1}: C^{i-1} -> C^i
        for i, t in cob.items():
            if i + 1 not in cob:
                continue
            for c, image in t.items():
                acc: dict[int, int] = {}
                for r, v in image.items():
                    _axpy(acc, v, cob[i + 1].get(r, {}))
                if acc:
                    return False
        return True


def enumerate_chains(p: FinitePoset) -> dict[int, list[tuple[int, ...]]]:
    """All chains of ``p`` grouped by dimension (|chain| - 1), vertices in order."""
    out: dict[int, list[tuple[int, ...]]] = {-1: [()]}
    strictly_above = [[j for j in p.order if j != i and p.up_mask[i] >> j & 1] for i in range(len(p))]

    def rec(chain):
        out.setdefault(len(chain) - 1, []).append(tuple(chain))
        for j in strictly_above[chain[-1]]:
            chain.append(j)
            rec(chain)
            chain.pop()

    for i in p.order:
        rec([i])
    for d in out:
        out[d].sort()
    return out


def order_complex(p: FinitePoset) -> ChainComplexQ:
    """Reduced chain complex of the order complex of ``p`` (pass an open interval)."""
    basis = enumerate_chains(p)
    boundary: dict[int, list[dict[int, int]]] = {}
    for d in sorted(basis):
        if d < 0:
            continue
        lower = {c: i for i, c in enumerate(basis[d - 1])}
        rows = []
        for chain in basis[d]:
            row = {}
            for j in range(len(chain)):
                face = chain[:j] + chain[j + 1:]
                row[lower[face]] = (-1) ** j
            rows.append(row)
        boundary[d] = rows
    return ChainComplexQ(basis, boundary)


def _rank(rows) -> int:
    ech = Echelon()
    for row in rows:
        ech.add(row)
    return ech.rank


def reduced_betti(c: ChainComplexQ) -> dict[int, int]:
    """Reduced Betti numbers over Q for dimensions -1 .. top."""
    ranks = {d: _rank(rows) for d, rows in c.boundary.items()}
    out = {}
    for d in sorted(c.basis):
        out[d] = len(c.basis[d]) - ranks.get(d, 0) - ranks.get(d + 1, 0)
    return out


@lru_cache(maxsize=None)
def interval_betti(mu: WeakComposition) -> dict[int, int]:
    """Reduced Betti numbers of the open interval (0, [n]^mu)."""
    P = maximal_interval(mu)
    if mu.size == 0:
        raise ValueError("the open interval of a one-element poset is undefined")
    return reduced_betti(order_complex(open_interval(P, P.bottom, P.top)))


def hat_betti(n: int, S) -> dict[int, int]:
    """Reduced Betti numbers of the proper part of B_n^S with a top adjoined."""
    P = hat_weighted_boolean(n, S)
    return reduced_betti(order_complex(open_interval(P, P.bottom, P.top)))


def ascent_free_betti_check(p: FinitePoset) -> CheckReport:
    """For every interval [x, y] of length l >= 2: the number of ascent-free
    maximal chains equals the reduced Betti number of (x, y) in dimension
    l - 2, and every other reduced Betti number vanishes."""
    witnesses = []
    intervals = 0
    for a in range(len(p)):
        for b in range(len(p)):
            if a == b or not p.leq(a, b) or p.rank[b] - p.rank[a] < 2:
                continue
            intervals += 1
            length = p.rank[b] - p.rank[a]
            chains = len(ascent_free_maximal_chains(p, a, b))
            betti = reduced_betti(order_complex(open_interval(p, a, b)))
            expected = {d: (chains if d == length - 2 else 0) for d in betti}
            if betti != expected:
                witnesses.append({"lower": str(p.elements[a]), "upper": str(p.elements[b]),
                                  "ascent_free": chains, "betti": betti})
    return CheckReport("ascent_free_betti", {"elements": len(p)}, not witnesses, witnesses[:10],
                       {"intervals": intervals})


def _reduced_euler_characteristic(p: FinitePoset, keep: list[int]) -> int:
    """-1 + sum over nonempty chains inside ``keep`` of (-1)^(|chain|-1)."""
    keepset = set(keep)
    # signed count of chains ending at each element: s(x) = 1 - sum_{y < x} s(y)
    signed = {}
    for x in p.order:
        if x not in keepset:
            continue
        signed[x] = 1 - sum(v for y, v in signed.items() if y != x and p.up_mask[y] >> x & 1)
    return -1 + sum(signed.values())


def top_cohomology_character(mu: WeakComposition, check: bool = True) -> ClassFunction:
    """Character of S_n on the top reduced cohomology of (0, [n]^mu).

    Homology is concentrated in dimension n-2, so the Hopf trace formula gives
    chi(g) = (-1)^(n-2) * reduced Euler characteristic of the g-fixed subcomplex,
    and g fixes a chain exactly when it fixes each element.  With ``check`` the
    concentration is verified first.  For n = 0 the trivial character of S_0 is
    returned by convention.
    """
    n = mu.size
    if n == 0:
        return ClassFunction(0, {(): Fraction(1)})
    P = maximal_interval(mu)
    if check:
        betti = interval_betti(mu)
        stray = {d: b for d, b in betti.items() if b and d != n - 2}
        if stray:
            raise ArithmeticError(f"homology of (0, [{n}]^{mu.parts}) not concentrated in top degree: {stray}")
    inner = [i for i in range(len(P)) if i not in (P.bottom, P.top)]
    values = {}
    for gamma in partitions(n):
        tau = class_representative(gamma)
        perm = act_on_poset(P, tau)
        fixed = [i for i in inner if perm[i] == i]
        values[gamma] = Fraction((-1) ** (n - 2) * _reduced_euler_characteristic(P, fixed))
    return ClassFunction(n, values)


def whitney_recursion_check(mu: WeakComposition) -> CheckReport:
    """sum over eta <= mu of (-1)^|eta| h_|eta|(y) ch H^(top)((0, [n-|eta|]^(mu-eta))) == delta_{n,0}."""
    from .symfunc import SymmetricFunction, basis_to_monomial, frobenius, multiply

    n = mu.size
    N = max(n, 0)
    total = SymmetricFunction({}, N)
    k = len(mu.parts)
    etas = _weak_compositions_below(mu)
    for eta in etas:
        nu = mu - eta
        chi = top_cohomology_character(nu, check=False)
        term = multiply(basis_to_monomial("h", (eta.size,) if eta.size else (), N), frobenius(chi, N))
        total = total + term.scale((-1) ** eta.size)
    expected = SymmetricFunction.one(N) if n == 0 else SymmetricFunction({}, N)
    ok = total == expected
    return CheckReport(
        "whitney_recursion",
        {"mu": list(mu.parts)},
        ok,
        [] if ok else [{"mu": list(mu.parts), "residual": repr(total - expected)}],
        {"terms": len(etas)},
    )


def _weak_compositions_below(mu: WeakComposition) -> list[WeakComposition]:
    out = [()]
    for part in mu.parts:
        out = [prefix + (v,) for prefix in out for v in range(part + 1)]
    return [WeakComposition(t) for t in out]


def cohomology_presentation(mu: WeakComposition) -> dict[ColoredPermutation, int] | list:
    """Coboundary relations of the top cohomology of (0, [n]^mu).

    Returns a list of relations, each a dict ColoredPermutation -> coefficient,
    one per chain of the open interval with n-2 elements; the generators are the
    maximal chains, named by their label words.
    """
    n = mu.size
    P = maximal_interval(mu)
    Q = open_interval(P, P.bottom, P.top)
    chains = enumerate_chains(Q)
    top = chains.get(n - 2, [])
    codim = chains.get(n - 3, [])
    bottom, topel = P.elements[P.bottom], P.elements[P.top]

    def word(chain):
        return permutation_from_chain([bottom] + [Q.elements[i] for i in chain] + [topel])

    names = {c: word(c) for c in top}
    top_set = set(top)
    relations = []
    for c in codim:
        rel = {}
        for full in top_set:
            if set(c) <= set(full):
                (extra,) = set(full) - set(c)
                pos = full.index(extra)
                rel[names[full]] = (-1) ** pos
        relations.append(rel)
    return relations
