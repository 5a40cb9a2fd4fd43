"""The weighted boolean algebra B_n^S, its closure with an added top, intervals,
maximal chains, Moebius values and the edge labeling by colored letters."""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Hashable, Iterable, Optional, Sequence

from .combinatorics import (
    ColoredPermutation,
    WeakComposition,
    enumerate_weak_compositions,
)
from .report import CheckReport

JSON_SCHEMA = "coloredext/poset@1"


@dataclass(frozen=True, order=True)
class WeightedSubset:
    base: tuple[int, ...]
    weight: WeakComposition

    def __post_init__(self):
        base = tuple(sorted(set(self.base)))
        object.__setattr__(self, "base", base)
        if not isinstance(self.weight, WeakComposition):
            object.__setattr__(self, "weight", WeakComposition(tuple(self.weight)))
        if self.weight.size != len(base):
            raise ValueError(f"|weight| = {self.weight.size} but |base| = {len(base)}")

    @property
    def rank(self) -> int:
        return len(self.base)

    def leq(self, other: "WeightedSubset") -> bool:
        return set(self.base) <= set(other.base) and self.weight.leq(other.weight)

    def act(self, tau: Sequence[int]) -> "WeightedSubset":
        return WeightedSubset(tuple(tau[x - 1] for x in self.base), self.weight)

    def name(self) -> str:
        return "{" + ",".join(map(str, self.base)) + "}^(" + ",".join(map(str, self.weight.parts)) + ")"

    def __str__(self) -> str:
        return self.name()


class _Top:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "TOP"

    def name(self) -> str:
        return "top"


TOP = _Top()


class FinitePoset:
    """Finite poset given by its elements and cover relations.

    Elements are stored with integer indices; ``up_mask[i]`` is the bitmap of
    all j with i <= j.  Ranks are lengths of the longest chain from a minimal
    element; ``is_graded`` tells whether every cover raises rank by one.
    """

    def __init__(self, elements: Sequence[Hashable], covers: Iterable[tuple[int, int]]):
        self.elements = list(elements)
        self.index = {x: i for i, x in enumerate(self.elements)}
        if len(self.index) != len(self.elements):
            raise ValueError("duplicate elements")
        m = len(self.elements)
        self.covers = sorted(set(covers))
        self.up: list[list[int]] = [[] for _ in range(m)]
        self.down: list[list[int]] = [[] for _ in range(m)]
        for i, j in self.covers:
            self.up[i].append(j)
            self.down[j].append(i)
        self.order = self._toposort()
        self._order_pos = {k: t for t, k in enumerate(self.order)}
        self.rank = [0] * m
        for i in self.order:
            for j in self.up[i]:
                self.rank[j] = max(self.rank[j], self.rank[i] + 1)
        self.up_mask = [0] * m
        for i in reversed(self.order):
            mask = 1 << i
            for j in self.up[i]:
                mask |= self.up_mask[j]
            self.up_mask[i] = mask
        for i, j in self.covers:
            if self.up_mask[j] >> i & 1:
                raise ValueError("cover relation has a cycle")
            for k in self.up[i]:
                if k != j and self.up_mask[k] >> j & 1:
                    raise ValueError(f"cover {i}<{j} is implied by transitivity")

    def _toposort(self) -> list[int]:
        indeg = [len(d) for d in self.down]
        stack = sorted((i for i, d in enumerate(indeg) if d == 0), reverse=True)
        out = []
        while stack:
            i = stack.pop()
            out.append(i)
            for j in sorted(self.up[i], reverse=True):
                indeg[j] -= 1
                if indeg[j] == 0:
                    stack.append(j)
        if len(out) != len(self.elements):
            raise ValueError("cover relation has a cycle")
        return out

    def __len__(self):
        return len(self.elements)

    def idx(self, x) -> int:
        """Index of ``x``; plain ints are taken to be indices already."""
        return x if isinstance(x, int) else self.index[x]

    def leq(self, a, b) -> bool:
        return bool(self.up_mask[self.idx(a)] >> self.idx(b) & 1)

    def is_graded(self) -> bool:
        return all(self.rank[j] == self.rank[i] + 1 for i, j in self.covers)

    def minimal(self) -> list[int]:
        return [i for i in range(len(self)) if not self.down[i]]

    def maximal(self) -> list[int]:
        return [i for i in range(len(self)) if not self.up[i]]

    @property
    def bottom(self) -> Optional[int]:
        mins = self.minimal()
        return mins[0] if len(mins) == 1 else None

    @property
    def top(self) -> Optional[int]:
        maxs = self.maximal()
        return maxs[0] if len(maxs) == 1 else None

    def is_bounded(self) -> bool:
        return self.bottom is not None and self.top is not None

    def length(self) -> int:
        return max(self.rank) - min(self.rank[i] for i in self.minimal()) if self.elements else 0

    def interval_indices(self, a, b) -> list[int]:
        ia, ib = self.idx(a), self.idx(b)
        if not self.leq(ia, ib):
            raise ValueError(f"{self.elements[ia]} is not below {self.elements[ib]}")
        return [k for k in self.order if self.up_mask[ia] >> k & 1 and self.up_mask[k] >> ib & 1]

    def induced(self, keep: Sequence[int]) -> "FinitePoset":
        """Induced subposet on the given indices (covers recomputed from the order)."""
        keep = sorted(keep, key=self._order_pos.__getitem__)
        pos = {k: t for t, k in enumerate(keep)}
        relations = [(pos[a], pos[b]) for a in keep for b in keep
                     if a != b and self.up_mask[a] >> b & 1]
        return _from_relations([self.elements[k] for k in keep], relations)

    def label_word(self, chain: Sequence[int], labeling) -> tuple:
        return tuple(labeling(self.elements[a], self.elements[b]) for a, b in zip(chain, chain[1:]))


def _from_relations(elements, relations) -> FinitePoset:
    """Poset from a transitively closed strict order relation (cover = no element in between)."""
    m = len(elements)
    above = [set() for _ in range(m)]
    for a, b in relations:
        above[a].add(b)
    covers = []
    for a in range(m):
        for b in above[a]:
            if not any(b in above[c] for c in above[a] if c != b):
                covers.append((a, b))
    return FinitePoset(elements, covers)


def _convex_subposet(p: FinitePoset, keep: Sequence[int]) -> FinitePoset:
    """Induced subposet on a convex set: its covers are the covers of ``p`` inside it."""
    pos = {k: t for t, k in enumerate(keep)}
    covers = [(pos[i], pos[j]) for i in keep for j in p.up[i] if j in pos]
    return FinitePoset([p.elements[k] for k in keep], covers)


def closed_interval(p: FinitePoset, a, b) -> FinitePoset:
    """Induced subposet {z : a <= z <= b}."""
    return _convex_subposet(p, p.interval_indices(a, b))


def open_interval(p: FinitePoset, a, b) -> FinitePoset:
    ia, ib = p.idx(a), p.idx(b)
    keep = [k for k in p.interval_indices(ia, ib) if k not in (ia, ib)]
    return _convex_subposet(p, keep)


def maximal_chain_indices(p: FinitePoset, a=None, b=None) -> list[tuple[int, ...]]:
    """Maximal chains of [a, b] (default: the whole bounded poset) as index tuples, bottom first."""
    ia = p.bottom if a is None else p.idx(a)
    ib = p.top if b is None else p.idx(b)
    if ia is None or ib is None:
        raise ValueError("poset is not bounded; give the interval endpoints")
    if not p.leq(ia, ib):
        raise ValueError("a is not below b")
    out = []
    path = [ia]

    def rec(i):
        if i == ib:
            out.append(tuple(path))
            return
        for j in p.up[i]:
            if p.up_mask[j] >> ib & 1:
                path.append(j)
                rec(j)
                path.pop()

    rec(ia)
    return out


def maximal_chains(p: FinitePoset, a=None, b=None) -> list[list]:
    return [[p.elements[i] for i in c] for c in maximal_chain_indices(p, a, b)]


# -- the weighted boolean algebra --------------------------------------------

def _weights(j: int, colors: Sequence[int]) -> list[WeakComposition]:
    k = max(colors)
    out = []
    for w in enumerate_weak_compositions(j, k):
        if w.support <= set(colors):
            out.append(w)
    return out


def build_weighted_boolean(n: int, S: Iterable[int]) -> FinitePoset:
    """B_n^S: weighted subsets B^mu of [n] with supp(mu) inside S."""
    colors = sorted(set(S))
    if not colors:
        raise ValueError("color set S must be nonempty")
    if colors[0] < 1:
        raise ValueError("colors are positive integers")
    elements: list[WeightedSubset] = []
    for j in range(n + 1):
        ws = _weights(j, colors)
        for base in combinations(range(1, n + 1), j):
            for w in ws:
                elements.append(WeightedSubset(base, w))
    elements.sort(key=lambda x: (x.rank, x.base, x.weight.padded(colors[-1])))
    index = {x: i for i, x in enumerate(elements)}
    covers = []
    for i, x in enumerate(elements):
        missing = [y for y in range(1, n + 1) if y not in x.base]
        for y in missing:
            for r in colors:
                up = WeightedSubset(x.base + (y,), x.weight + WeakComposition.unit(r))
                covers.append((i, index[up]))
    p = FinitePoset(elements, covers)
    for i, x in enumerate(elements):
        if p.rank[i] != x.rank:
            raise AssertionError(f"rank of {x} is {p.rank[i]}, expected {x.rank}")
    if not p.is_graded():
        raise AssertionError("B_n^S is not graded")
    p.n = n
    p.colors = tuple(colors)
    return p


def add_top(p: FinitePoset) -> FinitePoset:
    """Adjoin a new maximum covering exactly the maximal elements."""
    maxs = p.maximal()
    elements = p.elements + [TOP]
    t = len(p.elements)
    q = FinitePoset(elements, list(p.covers) + [(i, t) for i in maxs])
    for attr in ("n", "colors"):
        if hasattr(p, attr):
            setattr(q, attr, getattr(p, attr))
    return q


def hat_weighted_boolean(n: int, S: Iterable[int]) -> FinitePoset:
    return add_top(build_weighted_boolean(n, S))


def bottom_element() -> WeightedSubset:
    return WeightedSubset((), WeakComposition(()))


def maximal_element(n: int, mu: WeakComposition) -> WeightedSubset:
    return WeightedSubset(tuple(range(1, n + 1)), mu)


def maximal_interval(mu: WeakComposition) -> FinitePoset:
    """[0, [n]^mu] inside B_n^{supp mu}."""
    n = mu.size
    if n == 0:
        return FinitePoset([bottom_element()], [])
    p = build_weighted_boolean(n, mu.support)
    return closed_interval(p, bottom_element(), maximal_element(n, mu))


# -- labeling ----------------------------------------------------------------

@dataclass(frozen=True, order=True)
class EdgeLabel:
    letter: int
    color: int  # field order makes < the total order (letter, color)

    def __str__(self):
        return f"{self.letter}^{self.color}"


def product_lt(a: EdgeLabel, b: EdgeLabel) -> bool:
    """Strict order on [n+1] x P with the product order."""
    return a.letter <= b.letter and a.color <= b.color and a != b


def el_label(lower, upper) -> EdgeLabel:
    if upper is TOP:
        if not isinstance(lower, WeightedSubset):
            raise ValueError("edge into the top must start at a weighted subset")
        return EdgeLabel(len(lower.base) + 1, 1)
    if not (isinstance(lower, WeightedSubset) and isinstance(upper, WeightedSubset)):
        raise ValueError(f"not a cover: {lower!r}, {upper!r}")
    added = set(upper.base) - set(lower.base)
    if not set(lower.base) <= set(upper.base) or len(added) != 1:
        raise ValueError(f"not a cover: {lower} < {upper}")
    diff = upper.weight - lower.weight if lower.weight.leq(upper.weight) else None
    if diff is None or diff.size != 1:
        raise ValueError(f"not a cover: {lower} < {upper}")
    (x,) = added
    (r,) = diff.support
    return EdgeLabel(x, r)


def chain_from_permutation(sigma: ColoredPermutation) -> list[WeightedSubset]:
    chain = [bottom_element()]
    base: list[int] = []
    weight = WeakComposition(())
    for x, c in sigma.word:
        base.append(x)
        weight = weight + WeakComposition.unit(c)
        chain.append(WeightedSubset(tuple(base), weight))
    return chain


def permutation_from_chain(chain: Sequence[WeightedSubset]) -> ColoredPermutation:
    word = []
    for a, b in zip(chain, chain[1:]):
        if b is TOP:
            break
        lab = el_label(a, b)
        word.append((lab.letter, lab.color))
    return ColoredPermutation(tuple(word))


def is_increasing(word: Sequence[EdgeLabel], lt=product_lt) -> bool:
    return all(lt(a, b) for a, b in zip(word, word[1:]))


def is_ascent_free(word: Sequence[EdgeLabel], lt=product_lt) -> bool:
    return not any(lt(a, b) for a, b in zip(word, word[1:]))


def _lex_less_partial(u, v, lt) -> bool:
    for a, b in zip(u, v):
        if a != b:
            return lt(a, b)
    return len(u) < len(v)


TIE_BREAK_ORDERS = {
    "letter-color": lambda lab: (lab.letter, lab.color),
    "color-letter": lambda lab: (lab.color, lab.letter),
}


def verify_el_labeling(p: FinitePoset, labeling: Callable = el_label, lt=product_lt) -> CheckReport:
    """Every closed interval must have exactly one strictly increasing maximal
    chain, lexicographically before every other maximal chain.

    The verdict uses the total order (letter, color) on labels.  The same test
    is also run with the (color, letter) order and with the product order
    itself (first differing label strictly smaller); if the verdicts differ
    the report says so under ``details['tie_break_sensitive']``.
    """
    if not p.is_bounded():
        raise ValueError("EL-labeling needs a bounded poset")
    witnesses = []
    sensitive = []
    intervals = 0
    for a in range(len(p)):
        for b in range(len(p)):
            if a == b or not p.leq(a, b):
                continue
            intervals += 1
            chains = maximal_chain_indices(p, a, b)
            words = [p.label_word(c, labeling) for c in chains]
            inc = [i for i, w in enumerate(words) if is_increasing(w, lt)]
            name = (_name(p.elements[a]), _name(p.elements[b]))
            if len(inc) != 1:
                witnesses.append({"interval": name, "increasing_chains": len(inc)})
                continue
            w0 = words[inc[0]]
            verdicts = {}
            for tag, key in TIE_BREAK_ORDERS.items():
                k0 = tuple(map(key, w0))
                verdicts[tag] = all(k0 < tuple(map(key, w)) for i, w in enumerate(words) if i != inc[0])
            verdicts["product"] = all(_lex_less_partial(w0, w, lt) for i, w in enumerate(words) if i != inc[0])
            if not verdicts["letter-color"]:
                witnesses.append({"interval": name, "reason": "increasing chain not lexicographically first",
                                  "word": [str(x) for x in w0]})
            if len(set(verdicts.values())) > 1:
                sensitive.append({"interval": name, "verdicts": verdicts})
    return CheckReport(
        "el_labeling",
        {"elements": len(p)},
        not witnesses,
        witnesses[:20],
        {"intervals": intervals, "tie_break_sensitive": sensitive[:20]},
    )


def ascent_free_maximal_chains(p: FinitePoset, a=None, b=None, labeling: Callable = el_label, lt=product_lt) -> list[list]:
    out = []
    for c in maximal_chain_indices(p, a, b):
        if is_ascent_free(p.label_word(c, labeling), lt):
            out.append([p.elements[i] for i in c])
    return out


def mobius(p: FinitePoset, a, b) -> int:
    ia, ib = p.idx(a), p.idx(b)
    inside = p.interval_indices(ia, ib)  # topological order
    mu = {}
    for z in inside:
        if z == ia:
            mu[z] = 1
            continue
        mu[z] = -sum(mu[w] for w in inside if w != z and w in mu and p.up_mask[w] >> z & 1)
    return mu[ib]


def act_on_poset(p: FinitePoset, tau: Sequence[int]) -> dict[int, int]:
    """Index permutation induced by relabeling base sets by ``tau`` (TOP is fixed)."""
    out = {}
    for i, x in enumerate(p.elements):
        out[i] = i if x is TOP else p.index[x.act(tau)]
    return out


def interval_translation_check(p: FinitePoset, lower: WeightedSubset, upper: WeightedSubset) -> bool:
    """[A^nu, (A u B)^(nu+mu)] matches [0, B^mu] of B_B^S via C^rho -> (C - A)^(rho - nu), labels kept."""
    inner = closed_interval(p, lower, upper)
    B = tuple(sorted(set(upper.base) - set(lower.base)))
    mu = upper.weight - lower.weight
    relabel = {x: i + 1 for i, x in enumerate(B)}
    colors = getattr(p, "colors", tuple(sorted(mu.support)) or (1,))
    target = closed_interval(build_weighted_boolean(len(B), colors), bottom_element(),
                             WeightedSubset(tuple(range(1, len(B) + 1)), mu))
    mapping = {}
    for x in inner.elements:
        y = WeightedSubset(tuple(relabel[v] for v in x.base if v not in lower.base), x.weight - lower.weight)
        mapping[x] = y
    if set(mapping.values()) != set(target.elements) or len(mapping) != len(target):
        return False
    for i, j in inner.covers:
        x, y = inner.elements[i], inner.elements[j]
        fx, fy = mapping[x], mapping[y]
        if not (target.leq(fx, fy) and target.rank[target.index[fy]] == target.rank[target.index[fx]] + 1):
            return False
        lab, lab2 = el_label(x, y), el_label(fx, fy)
        if relabel[lab.letter] != lab2.letter or lab.color != lab2.color:
            return False
    return len(inner.covers) == len(target.covers)


# -- export ------------------------------------------------------------------

def _name(x) -> str:
    return x.name() if hasattr(x, "name") else str(x)


def to_dot(p: FinitePoset, labeling: Optional[Callable] = el_label, title: str = "poset") -> str:
    lines = [f'digraph "{title}" {{', "  rankdir=BT;", "  node [shape=plaintext];"]
    for i in sorted(range(len(p)), key=lambda i: (p.rank[i], _name(p.elements[i]))):
        lines.append(f'  "{_name(p.elements[i])}";')
    edges = sorted((_name(p.elements[i]), _name(p.elements[j]), i, j) for i, j in p.covers)
    for a, b, i, j in edges:
        attr = ""
        if labeling is not None:
            attr = f' [label="{labeling(p.elements[i], p.elements[j])}"]'
        lines.append(f'  "{a}" -> "{b}"{attr};')
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(p: FinitePoset, labeling: Optional[Callable] = el_label) -> str:
    """Versioned JSON: elements (id, base, weight, rank, name) and covers (lower, upper, label)."""
    elements = []
    for i, x in enumerate(p.elements):
        if x is TOP:
            elements.append({"id": i, "top": True, "rank": p.rank[i], "name": "top"})
        else:
            elements.append({"id": i, "base": list(x.base), "weight": x.weight.to_json(),
                             "rank": p.rank[i], "name": x.name()})
    covers = []
    for i, j in p.covers:
        entry = {"lower": i, "upper": j}
        if labeling is not None:
            lab = labeling(p.elements[i], p.elements[j])
            entry["label"] = [lab.letter, lab.color]
        covers.append(entry)
    doc = {
        "schema": JSON_SCHEMA,
        "n": getattr(p, "n", None),
        "colors": list(getattr(p, "colors", ())),
        "elements": elements,
        "covers": covers,
    }
    return json.dumps(doc, sort_keys=True, indent=1)


def from_json(text: str) -> FinitePoset:
    doc = json.loads(text)
    if doc.get("schema") != JSON_SCHEMA:
        raise ValueError(f"unsupported schema {doc.get('schema')!r}")
    elements = []
    for e in sorted(doc["elements"], key=lambda e: e["id"]):
        elements.append(TOP if e.get("top") else WeightedSubset(tuple(e["base"]), WeakComposition(tuple(e["weight"]))))
    p = FinitePoset(elements, [(c["lower"], c["upper"]) for c in doc["covers"]])
    if doc.get("n") is not None:
        p.n = doc["n"]
    p.colors = tuple(doc.get("colors", ()))
    return p
