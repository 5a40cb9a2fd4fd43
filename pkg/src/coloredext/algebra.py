"""The colored exterior module L(mu) and colored symmetric module S(mu).

Both are quotients of the free vector space on S_mu (colored permutations of
content mu) by quadratic relations applied at every adjacent pair of
positions.  Straightening is plain linear algebra: columns are ordered with
the intended basis last, so after elimination the pivot columns are exactly
the non-basis generators and reducing a unit vector leaves its expansion in
the basis.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Optional, Sequence

from .characters import ClassFunction, class_representative, compose
from .combinatorics import (
    ColoredPermutation,
    WeakComposition,
    enumerate_colored_permutations,
    enumerate_ninc,
    partitions,
)
from .linalg import Echelon, _axpy
from .report import CheckReport
from .symfunc import frobenius  # re-exported: characters feed straight into it

__all__ = [
    "QuotientModule",
    "exterior_relations",
    "symmetric_relations",
    "build_exterior_module",
    "build_symmetric_module",
    "straighten",
    "act",
    "character_exterior",
    "character_exterior_cached",
    "character_symmetric",
    "frobenius",
    "presentation_comparison",
]

Word = tuple[tuple[int, int], ...]
Vector = dict  # ColoredPermutation -> rational


def _swap_at(word: Word, p: int, a, b) -> Word:
    return word[:p] + (a, b) + word[p + 2:]


def exterior_relations(word: Word) -> Iterable[dict[Word, int]]:
    """Two-term and four-term relations at every adjacent position of ``word``."""
    for p in range(len(word) - 1):
        (x, i), (y, j) = word[p], word[p + 1]
        if i == j:
            yield _combine([word, _swap_at(word, p, (y, i), (x, i))])
        else:
            yield _combine([
                word,
                _swap_at(word, p, (y, j), (x, i)),
                _swap_at(word, p, (y, i), (x, j)),
                _swap_at(word, p, (x, j), (y, i)),
            ])


def symmetric_relations(word: Word) -> Iterable[dict[Word, int]]:
    """x^i y^j - y^i x^j (swap letters) and x^i y^j - x^j y^i (swap colors)."""
    for p in range(len(word) - 1):
        (x, i), (y, j) = word[p], word[p + 1]
        yield _combine([word], [_swap_at(word, p, (y, i), (x, j))])
        yield _combine([word], [_swap_at(word, p, (x, j), (y, i))])


def _combine(plus: Sequence[Word], minus: Sequence[Word] = ()) -> dict[Word, int]:
    out: dict[Word, int] = {}
    for w in plus:
        out[w] = out.get(w, 0) + 1
    for w in minus:
        out[w] = out.get(w, 0) - 1
    return {w: c for w, c in out.items() if c}


class QuotientModule:
    """Free space on S_mu modulo a relation subspace, with a chosen basis of cosets.

    ``generators`` lists S_mu with the non-basis generators first; relation
    rows are reduced in that column order.  The quotient is accepted only if
    the non-pivot columns are exactly ``expected_basis`` (when given).
    """

    def __init__(
        self,
        mu: WeakComposition,
        relations: Callable[[Word], Iterable[dict[Word, int]]],
        expected_basis: Optional[Sequence[ColoredPermutation]] = None,
        name: str = "quotient",
    ):
        self.mu = mu
        self.name = name
        everything = enumerate_colored_permutations(mu)
        if expected_basis is not None:
            tail = sorted(expected_basis)
            tail_set = set(tail)
            head = [s for s in everything if s not in tail_set]
            self.generators = head + tail
        else:
            self.generators = list(everything)
        self.index = {s.word: i for i, s in enumerate(self.generators)}
        self.echelon = Echelon()  # identity column order: generators are already ordered
        seen = set()
        self.relation_count = 0
        for s in self.generators:
            for rel in relations(s.word):
                row = {self.index[w]: c for w, c in rel.items()}
                key = tuple(sorted(row.items()))
                if key in seen:
                    continue
                seen.add(key)
                self.relation_count += 1
                self.echelon.add(row)
        self.rank = self.echelon.rank
        free = [i for i in range(len(self.generators)) if i not in self.echelon.pivots]
        self.basis = [self.generators[i] for i in free]
        self.basis_index = {s: t for t, s in enumerate(self.basis)}
        if expected_basis is not None and set(self.basis) != set(expected_basis):
            raise ArithmeticError(
                f"{name}({mu.parts}): rank {self.rank} leaves {len(self.basis)} free generators, "
                f"expected {len(expected_basis)}"
            )
        self._cache: dict[ColoredPermutation, Vector] = {}

    @property
    def dimension(self) -> int:
        return len(self.generators) - self.rank

    def straighten(self, sigma: ColoredPermutation) -> Vector:
        """Coordinates of the coset of ``sigma`` in the basis."""
        cached = self._cache.get(sigma)
        if cached is not None:
            return cached
        if sigma.word not in self.index:
            raise ValueError(f"{sigma} does not have content {self.mu.parts}")
        col = self.index[sigma.word]
        row = self.echelon.full_reduce({col: 1})
        out = {self.generators[c]: v for c, v in row.items()}
        self._cache[sigma] = out
        return out

    def straighten_vector(self, v: dict) -> Vector:
        acc: dict[int, object] = {}
        for sigma, c in v.items():
            _axpy(acc, c, {self.index[b.word]: x for b, x in self.straighten(sigma).items()})
        return {self.generators[i]: x for i, x in acc.items()}

    def act(self, tau: Sequence[int], v: Vector) -> Vector:
        """tau acts on letters, then the result is straightened."""
        acc: dict[int, object] = {}
        for b, c in v.items():
            image = self.straighten(b.act(tau))
            _axpy(acc, c, {self.index[s.word]: x for s, x in image.items()})
        return {self.generators[i]: x for i, x in acc.items()}

    def trace(self, tau: Sequence[int]):
        total = 0
        for b in self.basis:
            total += self.straighten(b.act(tau)).get(b, 0)
        return total

    def character(self) -> ClassFunction:
        n = self.mu.size
        return ClassFunction(n, {g: Fraction(self.trace(class_representative(g))) for g in partitions(n)})


def build_exterior_module(mu: WeakComposition) -> QuotientModule:
    if mu.size < 1:
        raise ValueError("L(mu) needs |mu| >= 1")
    return QuotientModule(mu, exterior_relations, enumerate_ninc(mu), "exterior")


def build_symmetric_module(mu: WeakComposition) -> QuotientModule:
    if mu.size < 1:
        raise ValueError("S(mu) needs |mu| >= 1")
    m = QuotientModule(mu, symmetric_relations, None, "symmetric")
    if m.dimension != 1:
        raise ArithmeticError(f"S({mu.parts}) has dimension {m.dimension}, expected 1")
    return m


def straighten(m: QuotientModule, sigma: ColoredPermutation) -> Vector:
    return m.straighten(sigma)


def act(m: QuotientModule, tau: Sequence[int], v: Vector) -> Vector:
    return m.act(tau, v)


def character_exterior(mu: WeakComposition) -> ClassFunction:
    if mu.size == 0:
        return ClassFunction(0, {(): Fraction(1)})
    return build_exterior_module(mu).character()


@lru_cache(maxsize=None)
def _character_compressed(parts: tuple[int, ...]) -> ClassFunction:
    return character_exterior(WeakComposition(parts))


def character_exterior_cached(mu: WeakComposition) -> ClassFunction:
    """character_exterior, shared between weak compositions with the same nonzero parts in order.

    Dropping zero parts renames colors monotonically, which maps generators,
    relations and the ascent-free basis of one module onto the other.
    """
    return _character_compressed(mu.compressed())


def character_symmetric(mu: WeakComposition) -> ClassFunction:
    if mu.size == 0:
        return ClassFunction(0, {(): Fraction(1)})
    return build_symmetric_module(mu).character()


def group_law_check(mu: WeakComposition) -> CheckReport:
    """act(tau o rho) == act(tau) o act(rho) on every basis vector, all tau, rho in S_n."""
    from itertools import permutations

    m = build_exterior_module(mu)
    n = mu.size
    group = list(permutations(range(1, n + 1)))
    witnesses = []
    for tau in group:
        for rho in group:
            both = compose(tau, rho)
            for b in m.basis:
                lhs = m.act(both, {b: 1})
                rhs = m.act(tau, m.act(rho, {b: 1}))
                if lhs != rhs:
                    witnesses.append({"tau": tau, "rho": rho, "basis": str(b)})
                    break
    return CheckReport("group_law", {"mu": list(mu.parts)}, not witnesses, witnesses[:5],
                       {"group_order": len(group)})


def presentation_comparison(mu: WeakComposition) -> CheckReport:
    """Compare the exterior relations with the coboundary relations of the
    top cohomology of (0, [n]^mu), generators matched by label word.

    Reports the ranks of both relation spaces and of their sum; the spaces
    agree exactly when all three ranks coincide.
    """
    from .topology import cohomology_presentation

    gens = enumerate_colored_permutations(mu)
    index = {s: i for i, s in enumerate(gens)}
    ext, coh, both = Echelon(), Echelon(), Echelon()
    for s in gens:
        for rel in exterior_relations(s.word):
            row = {index[ColoredPermutation(w)]: c for w, c in rel.items()}
            ext.add(row)
            both.add(row)
    for rel in cohomology_presentation(mu):
        row = {index[s]: c for s, c in rel.items()}
        coh.add(row)
        both.add(row)
    ok = ext.rank == coh.rank == both.rank
    details = {"exterior_rank": ext.rank, "cohomology_rank": coh.rank, "sum_rank": both.rank,
               "generators": len(gens)}
    return CheckReport("presentation_comparison", {"mu": list(mu.parts)}, ok,
                       [] if ok else [details], details)
