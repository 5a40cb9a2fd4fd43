"""Class functions on S_n and the irreducible character table.

Irreducible characters come from the Murnaghan-Nakayama rule, implemented on
beta-sets: removing a rim hook of length r is moving a bead from position b
to the empty position b - r, with sign (-1)^(beads jumped over).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Mapping, Sequence

from .combinatorics import partitions


def cycle_type(tau: Sequence[int]) -> tuple[int, ...]:
    """Cycle type of ``tau`` given in one-line notation on [n]."""
    n = len(tau)
    seen = [False] * n
    lengths = []
    for i in range(n):
        if not seen[i]:
            j, length = i, 0
            while not seen[j]:
                seen[j] = True
                j = tau[j] - 1
                length += 1
            lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


def class_representative(gamma: Sequence[int]) -> tuple[int, ...]:
    """Canonical permutation of cycle type ``gamma``: consecutive cycles (1 2 .. a)(a+1 ..)."""
    tau = []
    start = 1
    for length in gamma:
        block = list(range(start, start + length))
        tau.extend(block[1:] + block[:1])
        start += length
    return tuple(tau)


def centralizer_size(gamma: Sequence[int]) -> int:
    z = 1
    for part in set(gamma):
        m = list(gamma).count(part)
        z *= part**m * factorial(m)
    return z


def class_size(gamma: Sequence[int]) -> int:
    return factorial(sum(gamma)) // centralizer_size(gamma)


def compose(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    """(a o b)(x) = a(b(x)), one-line notation."""
    return tuple(a[b[i] - 1] for i in range(len(b)))


@lru_cache(maxsize=None)
def _mn(beta: tuple[int, ...], rho: tuple[int, ...]) -> int:
    if not rho:
        return 1
    r, rest = rho[0], rho[1:]
    beads = set(beta)
    total = 0
    for b in beta:
        target = b - r
        if target < 0 or target in beads:
            continue
        jumped = sum(1 for c in beta if target < c < b)
        new_beta = tuple(sorted((beads - {b}) | {target}, reverse=True))
        total += (-1) ** jumped * _mn(new_beta, rest)
    return total


def irreducible_character_value(lam: Sequence[int], rho: Sequence[int]) -> int:
    lam = tuple(lam)
    m = len(lam)
    beta = tuple(lam[i] + m - 1 - i for i in range(m))
    return _mn(beta, tuple(rho))


@dataclass(frozen=True)
class ClassFunction:
    """Map from cycle types (partitions of n) to exact rationals."""

    n: int
    values: Mapping[tuple[int, ...], Fraction]

    def __post_init__(self):
        classes = set(partitions(self.n))
        if set(self.values) != classes:
            raise ValueError(f"class function on S_{self.n} must cover exactly {sorted(classes)}")

    def __getitem__(self, gamma: Sequence[int]):
        return self.values[tuple(gamma)]

    def __eq__(self, other):
        if not isinstance(other, ClassFunction):
            return NotImplemented
        return self.n == other.n and all(self.values[g] == other.values[g] for g in self.values)

    def __hash__(self):
        return hash((self.n, tuple(sorted(self.values.items()))))

    def __add__(self, other: "ClassFunction") -> "ClassFunction":
        return ClassFunction(self.n, {g: self.values[g] + other.values[g] for g in self.values})

    def scale(self, c) -> "ClassFunction":
        return ClassFunction(self.n, {g: c * v for g, v in self.values.items()})

    def inner(self, other: "ClassFunction") -> Fraction:
        """Standard inner product; characters of S_n are real so no conjugation."""
        total = Fraction(0)
        for g, v in self.values.items():
            total += Fraction(class_size(g)) * v * other.values[g]
        return total / factorial(self.n)

    def decompose(self) -> dict[tuple[int, ...], Fraction]:
        """Multiplicities of irreducibles, keyed by the Specht shape."""
        out = {}
        for lam in partitions(self.n):
            c = self.inner(irreducible(lam))
            if c:
                out[lam] = c
        return out

    def is_character(self) -> bool:
        return all(c.denominator == 1 and c >= 0 for c in self.decompose().values())

    @property
    def degree(self):
        return self.values[(1,) * self.n] if self.n else self.values[()]

    def to_json(self) -> dict[str, str]:
        return {",".join(map(str, g)): str(v) for g, v in sorted(self.values.items(), reverse=True)}


def irreducible(lam: Sequence[int]) -> ClassFunction:
    n = sum(lam)
    return ClassFunction(n, {rho: Fraction(irreducible_character_value(lam, rho)) for rho in partitions(n)})


def trivial_character(n: int) -> ClassFunction:
    return ClassFunction(n, {g: Fraction(1) for g in partitions(n)})


def sign_character(n: int) -> ClassFunction:
    return ClassFunction(n, {g: Fraction((-1) ** (n - len(g))) for g in partitions(n)})


def character_table(n: int) -> dict[tuple[int, ...], ClassFunction]:
    return {lam: irreducible(lam) for lam in partitions(n)}
