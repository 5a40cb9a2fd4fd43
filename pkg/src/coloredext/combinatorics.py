"""Weak compositions, colored permutations, ascents, types, skew hooks and
standard Young tableaux with a prescribed descent set."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations
from math import factorial, prod
from typing import Iterable, Iterator, Sequence

from .polynomial import PolynomialT


@dataclass(frozen=True, order=True)
class WeakComposition:
    """Finitely supported vector of nonnegative integers, indexed by color 1, 2, ...

    Trailing zeros are dropped, so ``WeakComposition((1, 0, 0)) ==
    WeakComposition((1,))``.
    """

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {parts}")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        object.__setattr__(self, "parts", parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __call__(self, color: int) -> int:
        """Part at ``color`` (1-based); zero beyond the stored parts."""
        if color < 1:
            raise IndexError(color)
        return self.parts[color - 1] if color <= len(self.parts) else 0

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(i + 1 for i, p in enumerate(self.parts) if p)

    def padded(self, k: int) -> tuple[int, ...]:
        return self.parts + (0,) * (k - len(self.parts))

    def __add__(self, other: "WeakComposition") -> "WeakComposition":
        k = max(len(self), len(other))
        return WeakComposition(tuple(a + b for a, b in zip(self.padded(k), other.padded(k))))

    def __sub__(self, other: "WeakComposition") -> "WeakComposition":
        k = max(len(self), len(other))
        return WeakComposition(tuple(a - b for a, b in zip(self.padded(k), other.padded(k))))

    def leq(self, other: "WeakComposition") -> bool:
        k = max(len(self), len(other))
        return all(a <= b for a, b in zip(self.padded(k), other.padded(k)))

    def sorted_partition(self) -> tuple[int, ...]:
        return tuple(sorted((p for p in self.parts if p), reverse=True))

    def compressed(self) -> tuple[int, ...]:
        """Nonzero parts in color order (an order-preserving renaming of the support)."""
        return tuple(p for p in self.parts if p)

    @classmethod
    def unit(cls, color: int) -> "WeakComposition":
        return cls((0,) * (color - 1) + (1,))

    def to_json(self) -> list[int]:
        return list(self.parts)

    def __repr__(self) -> str:
        return f"WeakComposition{self.parts}"


def wc(*parts: int) -> WeakComposition:
    return WeakComposition(parts)


@dataclass(frozen=True, order=True)
class ColoredPermutation:
    """A word of colored letters ``(letter, color)``; letters are a permutation of [n]."""

    word: tuple[tuple[int, int], ...]

    def __post_init__(self):
        word = tuple((int(x), int(c)) for x, c in self.word)
        letters = sorted(x for x, _ in word)
        if letters != list(range(1, len(word) + 1)):
            raise ValueError(f"letters of {word} are not a permutation of [{len(word)}]")
        if any(c < 1 for _, c in word):
            raise ValueError("colors must be positive")
        object.__setattr__(self, "word", word)

    @classmethod
    def parse(cls, text: str) -> "ColoredPermutation":
        """Parse ``"2^1 1^4 3^2"``."""
        pairs = []
        for tok in text.split():
            x, c = tok.split("^")
            pairs.append((int(x), int(c)))
        return cls(tuple(pairs))

    def __len__(self) -> int:
        return len(self.word)

    @property
    def n(self) -> int:
        return len(self.word)

    @property
    def letters(self) -> tuple[int, ...]:
        return tuple(x for x, _ in self.word)

    @property
    def colors(self) -> tuple[int, ...]:
        return tuple(c for _, c in self.word)

    def color_of(self, letter: int) -> int:
        for x, c in self.word:
            if x == letter:
                return c
        raise KeyError(letter)

    def act(self, tau: Sequence[int]) -> "ColoredPermutation":
        """Apply ``tau`` (one-line notation, ``tau[x-1]`` is the image of x) to the letters."""
        return ColoredPermutation(tuple((tau[x - 1], c) for x, c in self.word))

    def to_json(self) -> list[list[int]]:
        return [[x, c] for x, c in self.word]

    def __str__(self) -> str:
        return " ".join(f"{x}^{c}" for x, c in self.word)

    def __repr__(self) -> str:
        return f"ColoredPermutation({self})"


def content(sigma: ColoredPermutation) -> WeakComposition:
    k = max(sigma.colors, default=0)
    counts = [0] * k
    for c in sigma.colors:
        counts[c - 1] += 1
    return WeakComposition(tuple(counts))


def is_colored_ascent(a: tuple[int, int], b: tuple[int, int]) -> bool:
    return a[0] < b[0] and a[1] <= b[1]


def ascent_positions(sigma: ColoredPermutation) -> frozenset[int]:
    w = sigma.word
    return frozenset(i + 1 for i in range(len(w) - 1) if is_colored_ascent(w[i], w[i + 1]))


def enumerate_weak_compositions(n: int, k: int) -> list[WeakComposition]:
    """All weak compositions of ``n`` with support in [k], in decreasing lex
    order of the padded part vectors: (2,0), (1,1), (0,2)."""
    if n < 0 or k < 1:
        raise ValueError("need n >= 0 and k >= 1")
    out = []

    def rec(prefix, remaining, slots):
        if slots == 1:
            out.append(WeakComposition(tuple(prefix) + (remaining,)))
            return
        for first in range(remaining, -1, -1):
            rec(prefix + [first], remaining - first, slots - 1)

    rec([], n, k)
    return out


def _color_words(mu: WeakComposition) -> Iterator[tuple[int, ...]]:
    """Distinct words in the colors of ``mu`` (multiset permutations), lex order."""
    counts = {c: mu(c) for c in mu.support}
    n = mu.size

    def rec(prefix):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for c in sorted(counts):
            if counts[c]:
                counts[c] -= 1
                prefix.append(c)
                yield from rec(prefix)
                prefix.pop()
                counts[c] += 1

    yield from rec([])


def enumerate_colored_permutations(mu: WeakComposition) -> list[ColoredPermutation]:
    """All of S_mu, sorted lexicographically on the ``(letter, color)`` word."""
    n = mu.size
    out = []
    for letters in permutations(range(1, n + 1)):
        for colors in _color_words(mu):
            out.append(ColoredPermutation(tuple(zip(letters, colors))))
    out.sort()
    return out


def enumerate_ninc(mu: WeakComposition) -> list[ColoredPermutation]:
    """Ascent-free members of S_mu, generated by pruned backtracking."""
    n = mu.size
    remaining = {c: mu(c) for c in mu.support}
    used = [False] * (n + 1)
    out = []

    def rec(word):
        if len(word) == n:
            out.append(ColoredPermutation(tuple(word)))
            return
        for x in range(1, n + 1):
            if used[x]:
                continue
            for c in sorted(remaining):
                if not remaining[c]:
                    continue
                if word and is_colored_ascent(word[-1], (x, c)):
                    continue
                used[x] = True
                remaining[c] -= 1
                word.append((x, c))
                rec(word)
                word.pop()
                remaining[c] += 1
                used[x] = False

    rec([])
    return out


def count_ninc(mu: WeakComposition) -> int:
    """|Ninc_mu| by dynamic programming over (used letters, last letter, last color, colors left)."""
    n = mu.size
    colors = sorted(mu.support)
    start = tuple(mu(c) for c in colors)

    @lru_cache(maxsize=None)
    def count(used: int, last: int, last_color: int, left: tuple[int, ...]) -> int:
        if used == (1 << n) - 1:
            return 1
        total = 0
        for x in range(1, n + 1):
            if used >> (x - 1) & 1:
                continue
            for idx, c in enumerate(colors):
                if not left[idx]:
                    continue
                if last and last < x and last_color <= c:
                    continue
                nxt = left[:idx] + (left[idx] - 1,) + left[idx + 1:]
                total += count(used | 1 << (x - 1), x, c, nxt)
        return total

    return count(0, 0, 0, start)


def multinomial(parts: Iterable[int]) -> int:
    parts = list(parts)
    return factorial(sum(parts)) // prod(factorial(p) for p in parts)


def count_colored_permutations(mu: WeakComposition) -> int:
    return factorial(mu.size) * multinomial(mu.parts)


def type_blocks(tau: Sequence[int]) -> list[list[int]]:
    """Blocks of the finest set partition joining tau(i), tau(i+1) whenever tau(i) < tau(i+1)."""
    if not tau:
        return []
    blocks = [[tau[0]]]
    for a, b in zip(tau, tau[1:]):
        if a < b:
            blocks[-1].append(b)
        else:
            blocks.append([b])
    return blocks


def type_partition(tau: Sequence[int]) -> tuple[int, ...]:
    return tuple(sorted((len(b) for b in type_blocks(tau)), reverse=True))


def descents(tau: Sequence[int]) -> frozenset[int]:
    return frozenset(i + 1 for i in range(len(tau) - 1) if tau[i] > tau[i + 1])


def eulerian_polynomial(n: int) -> PolynomialT:
    """sum over S_n of t^(des+1), by enumeration."""
    if n < 1:
        raise ValueError("n >= 1 required")
    coeffs = [0] * (n + 1)
    for tau in permutations(range(1, n + 1)):
        coeffs[len(descents(tau)) + 1] += 1
    return PolynomialT(coeffs)


# -- compositions, partitions ------------------------------------------------

def compositions(n: int) -> list[tuple[int, ...]]:
    """Compositions of n in lexicographic order; ``[()]`` for n == 0."""
    if n == 0:
        return [()]
    out = []
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            out.append((first,) + rest)
    return out


@lru_cache(maxsize=None)
def partitions(n: int, max_part: int | None = None) -> tuple[tuple[int, ...], ...]:
    """Partitions of n in decreasing lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def conjugate(lam: Sequence[int]) -> tuple[int, ...]:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > i) for i in range(lam[0]))


def partial_sums(alpha: Sequence[int]) -> frozenset[int]:
    """Proper partial sums alpha_1, alpha_1 + alpha_2, ... (excluding the total)."""
    out, s = set(), 0
    for a in alpha[:-1]:
        s += a
        out.add(s)
    return frozenset(out)


def composition_from_descents(n: int, desc: Iterable[int]) -> tuple[int, ...]:
    cuts = sorted(desc) + [n]
    out, prev = [], 0
    for c in cuts:
        out.append(c - prev)
        prev = c
    return tuple(out) if n else ()


@dataclass(frozen=True)
class SkewHook:
    """Ribbon shape built from horizontal runs ``source_composition``, drawn
    left to right and bottom to top.  ``cells`` are ``(row, col)`` with row 0
    at the bottom, listed in the numbering order."""

    source_composition: tuple[int, ...]
    cells: tuple[tuple[int, int], ...] = field(repr=False)
    descent_set: frozenset[int]

    @property
    def size(self) -> int:
        return len(self.cells)

    def composition(self) -> tuple[int, ...]:
        return composition_from_descents(self.size, self.descent_set)

    def is_connected(self) -> bool:
        cells = set(self.cells)
        if not cells:
            return True
        seen, stack = set(), [next(iter(cells))]
        while stack:
            r, c = stack.pop()
            if (r, c) in seen:
                continue
            seen.add((r, c))
            for nb in ((r + 1, c), (r - 1, c), (r, c + 1), (r, c - 1)):
                if nb in cells and nb not in seen:
                    stack.append(nb)
        return seen == cells

    def has_2x2(self) -> bool:
        cells = set(self.cells)
        return any({(r + 1, c), (r, c + 1), (r + 1, c + 1)} <= cells for r, c in cells)


def skew_hook(alpha: Sequence[int]) -> SkewHook:
    alpha = tuple(alpha)
    if any(a < 1 for a in alpha):
        raise ValueError(f"not a composition: {alpha}")
    cells = []
    col = 0
    for row, run in enumerate(alpha):
        start = col if row == 0 else col - 1
        for j in range(run):
            cells.append((row, start + j))
        col = start + run
    numbered = tuple(cells)
    desc = frozenset(i + 1 for i in range(len(numbered) - 1) if numbered[i + 1][0] > numbered[i][0])
    return SkewHook(alpha, numbered, desc)


# -- standard Young tableaux -------------------------------------------------

def count_syt_with_descents(shape: Sequence[int], desc: Iterable[int]) -> int:
    """Number of SYT of ``shape`` whose descent set (i with i+1 in a lower row) is ``desc``."""
    return sum(1 for t in iter_syt(shape) if syt_descents(t) == frozenset(desc))


def iter_syt(shape: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Yield SYT as the tuple ``rows`` where ``rows[i-1]`` is the row of entry i."""
    shape = tuple(shape)
    n = sum(shape)
    filled = [0] * len(shape)
    rows: list[int] = []

    def rec():
        if len(rows) == n:
            yield tuple(rows)
            return
        for r in range(len(shape)):
            if filled[r] < shape[r] and (r == 0 or filled[r - 1] > filled[r]):
                filled[r] += 1
                rows.append(r)
                yield from rec()
                rows.pop()
                filled[r] -= 1

    yield from rec()


def syt_descents(rows: Sequence[int]) -> frozenset[int]:
    return frozenset(i + 1 for i in range(len(rows) - 1) if rows[i + 1] > rows[i])


def hook_length_count(shape: Sequence[int]) -> int:
    n = sum(shape)
    conj = conjugate(shape)
    hooks = 1
    for i, row in enumerate(shape):
        for j in range(row):
            hooks *= row - j + conj[j] - i - 1
    return factorial(n) // hooks

