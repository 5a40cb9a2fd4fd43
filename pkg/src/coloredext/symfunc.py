"""Exact symmetric functions, double series in (x, y), specializations, and
the word-inversion check.

Everything is stored in the monomial basis.  Products of monomial symmetric
functions are computed in a finite window of variables: the coefficient of
m_nu in m_lam * m_mu is the number of ways to write the exponent vector nu
(padded to len(nu) variables) as a + b with a a rearrangement of lam and b a
rearrangement of mu.  len(nu) <= |nu| <= N, so a window of N variables is
always wide enough.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product as iproduct
from math import comb, factorial
from typing import Callable, Hashable, Mapping, Sequence

from .characters import ClassFunction, class_size
from .combinatorics import (
    compositions,
    count_syt_with_descents,
    multinomial,
    partitions,
    skew_hook,
)
from .linalg import solve_square
from .polynomial import PolynomialT
from .report import CheckReport

Partition = tuple


def _clean(v):
    if isinstance(v, Fraction) and v.denominator == 1:
        return int(v)
    return v


def _distinct_arrangements(parts: tuple[int, ...], slots: int, cap: tuple[int, ...]):
    """Distinct placements of ``parts`` (padded with zeros) into ``slots`` slots, bounded by ``cap``."""
    counts: dict[int, int] = {}
    for p in parts:
        counts[p] = counts.get(p, 0) + 1
    zeros = slots - len(parts)
    if zeros < 0:
        return
    counts[0] = counts.get(0, 0) + zeros
    values = sorted(counts)
    out: list[int] = []

    def rec(i):
        if i == slots:
            yield tuple(out)
            return
        for v in values:
            if counts[v] and v <= cap[i]:
                counts[v] -= 1
                out.append(v)
                yield from rec(i + 1)
                out.pop()
                counts[v] += 1

    yield from rec(0)


@lru_cache(maxsize=None)
def monomial_product(lam: Partition, mu: Partition) -> dict[Partition, int]:
    n = sum(lam) + sum(mu)
    out = {}
    for nu in partitions(n):
        slots = len(nu)
        if slots < max(len(lam), len(mu)):
            continue
        count = 0
        for a in _distinct_arrangements(lam, slots, nu):
            b = tuple(sorted((x - y for x, y in zip(nu, a) if x - y), reverse=True))
            if b == mu:
                count += 1
        if count:
            out[nu] = count
    return out


class SymmetricFunction:
    """Element of the ring of symmetric functions truncated at degree ``N``.

    Coefficients are keyed by partitions (monomial basis).
    """

    __slots__ = ("N", "coeffs")

    def __init__(self, coeffs: Mapping[Partition, object] | None = None, N: int = 8):
        self.N = N
        self.coeffs: dict[Partition, object] = {}
        for lam, v in (coeffs or {}).items():
            lam = tuple(lam)
            if v and sum(lam) <= N:
                self.coeffs[lam] = _clean(Fraction(v)) if not isinstance(v, int) else v

    @classmethod
    def one(cls, N: int) -> "SymmetricFunction":
        return cls({(): 1}, N)

    def _check(self, other: "SymmetricFunction"):
        if self.N != other.N:
            raise ValueError(f"degree bound mismatch: {self.N} vs {other.N}")

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        self._check(other)
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return SymmetricFunction(out, self.N)

    __radd__ = __add__

    def __neg__(self):
        return SymmetricFunction({k: -v for k, v in self.coeffs.items()}, self.N)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "SymmetricFunction":
        return SymmetricFunction({k: c * v for k, v in self.coeffs.items()}, self.N)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return multiply(self, other)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, SymmetricFunction):
            return NotImplemented
        return self.N == other.N and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.N, tuple(sorted(self.coeffs.items()))))

    def __getitem__(self, lam):
        return self.coeffs.get(tuple(lam), 0)

    def homogeneous(self, n: int) -> "SymmetricFunction":
        return SymmetricFunction({k: v for k, v in self.coeffs.items() if sum(k) == n}, self.N)

    def with_bound(self, N: int) -> "SymmetricFunction":
        return SymmetricFunction(self.coeffs, N)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __repr__(self):
        if not self.coeffs:
            return "0"
        return " + ".join(f"{v}*m{list(k)}" for k, v in sorted(self.coeffs.items(), key=lambda kv: (sum(kv[0]), kv[0])))


def multiply(f: SymmetricFunction, g: SymmetricFunction) -> SymmetricFunction:
    f._check(g)
    N = f.N
    out: dict[Partition, object] = {}
    for lam, a in f.coeffs.items():
        for mu, b in g.coeffs.items():
            if sum(lam) + sum(mu) > N:
                continue
            ab = a * b
            for nu, c in monomial_product(lam, mu).items():
                out[nu] = out.get(nu, 0) + ab * c
    return SymmetricFunction(out, N)


# -- bases -------------------------------------------------------------------

def _one_row(basis: str, k: int) -> dict[Partition, int]:
    if basis == "e":
        return {(1,) * k: 1}
    if basis == "h":
        return {lam: 1 for lam in partitions(k)}
    if basis == "p":
        return {(k,): 1}
    raise ValueError(basis)


@lru_cache(maxsize=None)
def kostka(lam: Partition, mu: Partition) -> int:
    """Number of SSYT of shape ``lam`` and content ``mu``, by adding horizontal strips."""
    if sum(lam) != sum(mu):
        return 0

    def strips(shape: tuple[int, ...], size: int):
        # horizontal strips of ``size`` added to ``shape`` staying inside ``lam``
        rows = len(lam)
        shape = shape + (0,) * (rows - len(shape))

        def rec(i, left, acc):
            if i == rows:
                if left == 0:
                    yield tuple(acc)
                return
            upper = lam[i] if i == 0 else min(lam[i], shape[i - 1])
            for add in range(min(left, upper - shape[i]), -1, -1):
                acc.append(shape[i] + add)
                yield from rec(i + 1, left - add, acc)
                acc.pop()

        yield from rec(0, size, [])

    @lru_cache(maxsize=None)
    def count(shape, i):
        if i == len(mu):
            return 1 if tuple(s for s in shape if s) == lam else 0
        return sum(count(nxt, i + 1) for nxt in strips(shape, mu[i]))

    return count((), 0)


@lru_cache(maxsize=None)
def _basis_element(basis: str, lam: Partition) -> tuple[tuple[Partition, int], ...]:
    if basis == "m":
        return ((lam, 1),)
    if basis == "s":
        n = sum(lam)
        return tuple((mu, kostka(lam, mu)) for mu in partitions(n) if kostka(lam, mu))
    acc: dict[Partition, int] = {(): 1}
    for part in lam:
        nxt: dict[Partition, int] = {}
        for a, x in acc.items():
            for b, y in _one_row(basis, part).items():
                for nu, c in monomial_product(a, b).items():
                    nxt[nu] = nxt.get(nu, 0) + x * y * c
        acc = {k: v for k, v in nxt.items() if v}
    return tuple(sorted(acc.items()))


def basis_to_monomial(basis: str, lam: Sequence[int], N: int | None = None) -> SymmetricFunction:
    if basis not in {"m", "e", "h", "p", "s"}:
        raise ValueError(f"unknown basis {basis!r}")
    lam = tuple(lam)
    if N is None:
        N = sum(lam)
    if sum(lam) > N:
        raise ValueError(f"|{lam}| exceeds degree bound {N}")
    return SymmetricFunction(dict(_basis_element(basis, lam)), N)


def e(*lam, N=None):
    return basis_to_monomial("e", lam, N)


def h(*lam, N=None):
    return basis_to_monomial("h", lam, N)


def p(*lam, N=None):
    return basis_to_monomial("p", lam, N)


def s(*lam, N=None):
    return basis_to_monomial("s", lam, N)


def m(*lam, N=None):
    return basis_to_monomial("m", lam, N)


def from_basis(basis: str, coeffs: Mapping[Partition, object], N: int) -> SymmetricFunction:
    out = SymmetricFunction({}, N)
    for lam, c in coeffs.items():
        if c:
            out = out + basis_to_monomial(basis, lam, N).scale(c)
    return out


def to_basis(f: SymmetricFunction, basis: str) -> dict[Partition, object]:
    """Coefficients of ``f`` in ``basis``, by an exact solve in each degree."""
    out: dict[Partition, object] = {}
    degrees = sorted({sum(k) for k in f.coeffs})
    for n in degrees:
        parts = partitions(n)
        # column j of the system is basis element j in monomial coordinates
        mat = [[0] * len(parts) for _ in parts]
        index = {lam: i for i, lam in enumerate(parts)}
        for j, lam in enumerate(parts):
            for nu, c in _basis_element(basis, lam):
                mat[index[nu]][j] = c
        rhs = [f[nu] for nu in parts]
        sol = solve_square(mat, rhs)
        for lam, c in zip(parts, sol):
            if c:
                out[lam] = c
    return out


def frobenius(chi: ClassFunction, N: int | None = None) -> SymmetricFunction:
    """(1/n!) sum over classes of |class| chi(class) p_class, in the monomial basis."""
    n = chi.n
    N = n if N is None else N
    out = SymmetricFunction({}, N)
    for gamma, v in chi.values.items():
        if v:
            out = out + basis_to_monomial("p", gamma, N).scale(Fraction(class_size(gamma)) * v / factorial(n))
    return out


# -- skew hooks --------------------------------------------------------------

def hook_schur(alpha: Sequence[int], N: int | None = None) -> SymmetricFunction:
    """s_H(alpha) as sum over shapes of (#SYT with descent set des H(alpha)) s_shape."""
    alpha = tuple(alpha)
    n = sum(alpha)
    N = n if N is None else N
    desc = skew_hook(alpha).descent_set if alpha else frozenset()
    out = SymmetricFunction({}, N)
    for lam in partitions(n):
        c = count_syt_with_descents(lam, desc)
        if c:
            out = out + basis_to_monomial("s", lam, N).scale(c)
    return out


# -- double series -----------------------------------------------------------

class DoubleSeries:
    """Truncated element of Lambda_x (x) Lambda_y in the monomial (x) monomial basis.

    Terms with x-degree or y-degree above ``N`` are discarded.
    """

    __slots__ = ("N", "coeffs")

    def __init__(self, coeffs: Mapping[tuple[Partition, Partition], object] | None = None, N: int = 4):
        self.N = N
        self.coeffs: dict[tuple[Partition, Partition], object] = {}
        for (lx, ly), v in (coeffs or {}).items():
            if v and sum(lx) <= N and sum(ly) <= N:
                self.coeffs[(tuple(lx), tuple(ly))] = _clean(Fraction(v)) if not isinstance(v, int) else v

    @classmethod
    def one(cls, N: int) -> "DoubleSeries":
        return cls({((), ()): 1}, N)

    @classmethod
    def tensor(cls, fx: SymmetricFunction, gy: SymmetricFunction, N: int) -> "DoubleSeries":
        return cls({(a, b): u * v for a, u in fx.coeffs.items() for b, v in gy.coeffs.items()}, N)

    def _check(self, other):
        if self.N != other.N:
            raise ValueError(f"degree bound mismatch: {self.N} vs {other.N}")

    def __add__(self, other):
        self._check(other)
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return DoubleSeries(out, self.N)

    def __neg__(self):
        return DoubleSeries({k: -v for k, v in self.coeffs.items()}, self.N)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other: "DoubleSeries") -> "DoubleSeries":
        self._check(other)
        N = self.N
        out: dict = {}
        for (ax, ay), u in self.coeffs.items():
            for (bx, by), v in other.coeffs.items():
                if sum(ax) + sum(bx) > N or sum(ay) + sum(by) > N:
                    continue
                uv = u * v
                px = monomial_product(ax, bx)
                py = monomial_product(ay, by)
                for cx, i in px.items():
                    for cy, j in py.items():
                        out[(cx, cy)] = out.get((cx, cy), 0) + uv * i * j
        return DoubleSeries(out, N)

    def __eq__(self, other):
        if not isinstance(other, DoubleSeries):
            return NotImplemented
        return self.N == other.N and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.N, tuple(sorted(self.coeffs.items()))))

    def grade(self, n: int) -> "DoubleSeries":
        """Part of total y-degree ``n``."""
        return DoubleSeries({k: v for k, v in self.coeffs.items() if sum(k[1]) == n}, self.N)

    def y_coefficient(self, lx: Partition) -> SymmetricFunction:
        """Symmetric function in y multiplying m_lx(x)."""
        return SymmetricFunction({ly: v for (a, ly), v in self.coeffs.items() if a == tuple(lx)}, self.N)

    def x_coefficient(self, ly: Partition) -> SymmetricFunction:
        return SymmetricFunction({lx: v for (lx, b), v in self.coeffs.items() if b == tuple(ly)}, self.N)

    def x_partitions(self) -> set:
        return {k[0] for k in self.coeffs}

    def diff(self, other: "DoubleSeries") -> dict:
        keys = set(self.coeffs) | set(other.coeffs)
        return {k: (self.coeffs.get(k, 0), other.coeffs.get(k, 0)) for k in sorted(keys)
                if self.coeffs.get(k, 0) != other.coeffs.get(k, 0)}

    def to_json(self) -> list[dict]:
        rows = []
        for (lx, ly), v in sorted(self.coeffs.items(), key=lambda kv: (sum(kv[0][1]), kv[0])):
            v = Fraction(v)
            rows.append({
                "x_partition": list(lx),
                "y_partition": list(ly),
                "numerator": v.numerator,
                "denominator": v.denominator,
            })
        return rows

    def __repr__(self):
        return f"DoubleSeries(N={self.N}, terms={len(self.coeffs)})"


def koszul_dual_series(N: int) -> DoubleSeries:
    """sum_{n <= N} (-1)^n h_n(x) h_n(y)."""
    out = DoubleSeries({}, N)
    for n in range(N + 1):
        hn = basis_to_monomial("h", (n,) if n else (), N)
        out = out + _signed_tensor(hn, hn, (-1) ** n, N)
    return out


def _signed_tensor(fx, gy, sign, N):
    return DoubleSeries({(a, b): sign * u * v for a, u in fx.coeffs.items() for b, v in gy.coeffs.items()}, N)


def invert_double_series(F: DoubleSeries, N: int | None = None) -> DoubleSeries:
    """Multiplicative inverse, graded by y-degree: G_0 = 1, G_n = -sum_{j>=1} F_j G_{n-j}."""
    N = F.N if N is None else N
    if N != F.N:
        F = DoubleSeries(F.coeffs, N)
    if F.grade(0) != DoubleSeries.one(N):
        raise ValueError("constant term must be 1")
    parts = [F.grade(j) for j in range(N + 1)]
    G = [DoubleSeries.one(N)]
    for n in range(1, N + 1):
        acc = DoubleSeries({}, N)
        for j in range(1, n + 1):
            acc = acc + parts[j] * G[n - j]
        G.append(-acc.grade(n))
    out = DoubleSeries({}, N)
    for g in G:
        out = out + g
    return out


def explicit_rhs_series(n_max: int) -> DoubleSeries:
    """sum over compositions alpha of e_{sort(alpha)}(x) s_{H(alpha)}(y)."""
    N = n_max
    out = DoubleSeries.one(N)
    for n in range(1, n_max + 1):
        for alpha in compositions(n):
            lam = tuple(sorted(alpha, reverse=True))
            out = out + DoubleSeries.tensor(basis_to_monomial("e", lam, N), hook_schur(alpha, N), N)
    return out


def assemble_lhs_series(n_max: int, k: int, character_of=None) -> DoubleSeries:
    """sum over weak compositions mu (|mu| <= n_max, supp in [k]) of ch L(mu)(y) x^mu.

    Coefficients of x^mu are first checked to depend only on sort(mu), then
    re-expressed in the monomial symmetric basis in x.  ``character_of`` maps
    a weak composition to its class function; defaults to the exterior module
    character.
    """
    from .algebra import character_exterior_cached
    from .combinatorics import enumerate_weak_compositions

    if k < n_max:
        raise ValueError(f"need k >= n_max to keep every x-monomial (got k={k}, n_max={n_max})")
    character_of = character_of or character_exterior_cached
    N = n_max
    coeffs: dict = {}
    for n in range(n_max + 1):
        by_shape: dict[Partition, SymmetricFunction] = {}
        for mu in enumerate_weak_compositions(n, k):
            chi = character_of(mu)
            f = frobenius(chi, N)
            lam = mu.sorted_partition()
            if lam in by_shape:
                if by_shape[lam] != f:
                    raise AssertionError(f"x-coefficient not symmetric: {mu} differs from its rearrangements")
            else:
                by_shape[lam] = f
        for lam, f in by_shape.items():
            for ly, v in f.coeffs.items():
                coeffs[(lam, ly)] = v
    return DoubleSeries(coeffs, N)


def schur_expansion_y(F: DoubleSeries) -> dict[tuple[Partition, Partition], object]:
    """Coefficients of m_lx(x) s_ly(y)."""
    out = {}
    for lx in sorted(F.x_partitions()):
        for ly, c in to_basis(F.y_coefficient(lx), "s").items():
            out[(lx, ly)] = c
    return out


# -- specializations ---------------------------------------------------------

def specialize_E1(f: SymmetricFunction) -> list:
    """Image under p_i -> y * delta_{i,1}, as ordinary coefficients of y^0, y^1, ..."""
    coeffs = to_basis(f, "p")
    out = [0] * (f.N + 1)
    for lam, c in coeffs.items():
        if all(part == 1 for part in lam):
            out[len(lam)] += c
    return [_clean(Fraction(v)) for v in out]


def specialize_E2(f: SymmetricFunction) -> PolynomialT:
    """Image under e_i -> t (i >= 1), i.e. e_lam -> t^len(lam)."""
    coeffs = to_basis(f, "e")
    out = PolynomialT()
    for lam, c in coeffs.items():
        out = out + PolynomialT([0] * len(lam) + [c])
    return out


def riordan_expansion(n_max: int) -> list[PolynomialT]:
    """Coefficients of y^n/n! in (1-t)/(1 - t exp((1-t) y)).

    Rewritten as 1 / (1 - t w) with w = sum_{n>=1} (1-t)^(n-1) y^n / n!, which
    has no constant term, so the geometric series is a finite sum per degree.
    """
    one_minus_t = PolynomialT([1, -1])
    t = PolynomialT.t()
    w = [PolynomialT()] + [one_minus_t ** (n - 1) * Fraction(1, factorial(n)) for n in range(1, n_max + 1)]
    result = [PolynomialT([1])] + [PolynomialT() for _ in range(n_max)]
    power = [PolynomialT([1])] + [PolynomialT() for _ in range(n_max)]  # (t w)^j
    tw = [c * t for c in w]
    for _ in range(1, n_max + 1):
        nxt = [PolynomialT() for _ in range(n_max + 1)]
        for i, a in enumerate(power):
            if not a.coeffs:
                continue
            for j in range(1, n_max + 1 - i):
                nxt[i + j] = nxt[i + j] + a * tw[j]
        power = nxt
        result = [r + q for r, q in zip(result, power)]
    return [r * factorial(n) for n, r in enumerate(result)]


def exponential_inverse_E2(n_max: int) -> list[PolynomialT]:
    """E_2 applied to (sum (-1)^n h_n(x) y^n/n!)^{-1}, as coefficients of y^n/n!."""
    ordinary = [PolynomialT([1])]
    for n in range(1, n_max + 1):
        ordinary.append(specialize_E2(basis_to_monomial("h", (n,), n)) * Fraction((-1) ** n, factorial(n)))
    from .polynomial import series_inverse

    inv = series_inverse(ordinary, n_max)
    return [c * factorial(n) for n, c in enumerate(inv)]


# -- series with symmetric-function coefficients ------------------------------

def invert_y_series(coeffs: Sequence[SymmetricFunction], order: int) -> list[SymmetricFunction]:
    """Inverse of sum coeffs[j] (constant term 1) in an ordinary graded variable."""
    N = coeffs[0].N
    if coeffs[0] != SymmetricFunction.one(N):
        raise ValueError("constant term must be 1")
    inv = [SymmetricFunction.one(N)]
    for n in range(1, order + 1):
        acc = SymmetricFunction({}, N)
        for j in range(1, n + 1):
            if j < len(coeffs):
                acc = acc + multiply(coeffs[j], inv[n - j])
        inv.append(-acc)
    return inv


def exponential_product(a: Sequence[SymmetricFunction], b: Sequence[SymmetricFunction], order: int) -> list[SymmetricFunction]:
    """Product of two exponential series sum a_n y^n/n!, as exponential coefficients."""
    N = a[0].N
    out = []
    for n in range(order + 1):
        acc = SymmetricFunction({}, N)
        for j in range(n + 1):
            acc = acc + multiply(a[j], b[n - j]).scale(comb(n, j))
        out.append(acc)
    return out


def p1_power(n: int, N: int | None = None) -> SymmetricFunction:
    """h_1^n in the monomial basis: coefficient of m_nu is the multinomial n!/prod(nu_i!)."""
    N = n if N is None else N
    return SymmetricFunction({nu: multinomial(nu) for nu in partitions(n)}, N)


# -- Lambda_y[t] -------------------------------------------------------------

class TSymmetricFunction:
    """Symmetric function in y with coefficients in Q[t]; keys are partitions."""

    def __init__(self, coeffs: Mapping[Partition, PolynomialT] | None = None, N: int = 4):
        self.N = N
        self.coeffs = {tuple(k): v for k, v in (coeffs or {}).items() if v.coeffs and sum(k) <= N}

    def __add__(self, other):
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, PolynomialT()) + v
        return TSymmetricFunction(out, self.N)

    def __neg__(self):
        return TSymmetricFunction({k: -v for k, v in self.coeffs.items()}, self.N)

    def __mul__(self, other):
        out: dict = {}
        for a, u in self.coeffs.items():
            for b, v in other.coeffs.items():
                if sum(a) + sum(b) > self.N:
                    continue
                uv = u * v
                for nu, c in monomial_product(a, b).items():
                    out[nu] = out.get(nu, PolynomialT()) + uv * c
        return TSymmetricFunction(out, self.N)

    def __eq__(self, other):
        return isinstance(other, TSymmetricFunction) and self.N == other.N and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.N, tuple(sorted(self.coeffs.items()))))

    def homogeneous(self, n):
        return TSymmetricFunction({k: v for k, v in self.coeffs.items() if sum(k) == n}, self.N)

    @classmethod
    def lift(cls, f: SymmetricFunction, poly: PolynomialT) -> "TSymmetricFunction":
        return cls({k: poly * v for k, v in f.coeffs.items()}, f.N)


def specialize_E2_double(F: DoubleSeries) -> TSymmetricFunction:
    """Apply E_2 to the x side of a double series."""
    by_y: dict = {}
    for ly in {k[1] for k in F.coeffs}:
        by_y[ly] = specialize_E2(F.x_coefficient(ly))
    return TSymmetricFunction(by_y, F.N)


def invert_t_series(F: TSymmetricFunction) -> TSymmetricFunction:
    N = F.N
    grades = [F.homogeneous(j) for j in range(N + 1)]
    if grades[0].coeffs != {(): PolynomialT([1])}:
        raise ValueError("constant term must be 1")
    G = [grades[0]]
    for n in range(1, N + 1):
        acc = TSymmetricFunction({}, N)
        for j in range(1, n + 1):
            acc = acc + grades[j] * G[n - j]
        G.append(-acc.homogeneous(n))
    out = TSymmetricFunction({}, N)
    for g in G:
        out = out + g
    return out


# -- checks ------------------------------------------------------------------

def gessel_check(alphabet: Sequence[Hashable], leq: Callable[[object, object], bool], max_length: int) -> CheckReport:
    """Per-word check of F(W) * Fbar(Wbar) = 1.

    A link ab is allowed when not (a <= b).  W collects words whose links are
    all allowed, Wbar words whose links are all forbidden; the empty word and
    single letters lie in both.  For every word w of length <= max_length the
    sum over factorizations w = uv with u in W, v in Wbar of (-1)^|v| must be
    1 for the empty word and 0 otherwise.
    """
    letters = list(alphabet)

    def in_w(word):
        return all(not leq(a, b) for a, b in zip(word, word[1:]))

    def in_wbar(word):
        return all(leq(a, b) for a, b in zip(word, word[1:]))

    witnesses = []
    checked = 0
    for length in range(max_length + 1):
        for word in iproduct(letters, repeat=length):
            total = 0
            for cut in range(length + 1):
                u, v = word[:cut], word[cut:]
                if in_w(u) and in_wbar(v):
                    total += (-1) ** len(v)
            expected = 1 if length == 0 else 0
            checked += 1
            if total != expected:
                witnesses.append({"word": [list(a) if isinstance(a, tuple) else a for a in word], "sum": total})
    return CheckReport(
        "gessel",
        {"alphabet_size": len(letters), "max_length": max_length},
        not witnesses,
        witnesses[:10],
        {"words_checked": checked},
    )


def product_order_alphabet(a: int, b: int):
    letters = [(i, j) for i in range(1, a + 1) for j in range(1, b + 1)]

    def leq(u, v):
        return u[0] <= v[0] and u[1] <= v[1]

    return letters, leq


def regular_rep_check(n_max: int) -> CheckReport:
    """(1 - h_1)^{-1} in degree n against h_1^n and against the sum of skew-hook Schur functions."""
    N = n_max
    series = [SymmetricFunction.one(N), -basis_to_monomial("h", (1,), N)]
    inv = invert_y_series(series, n_max)
    witnesses = []
    for n in range(n_max + 1):
        target = p1_power(n, N)
        hooks = SymmetricFunction({}, N)
        for alpha in compositions(n):
            hooks = hooks + (hook_schur(alpha, N) if alpha else SymmetricFunction.one(N))
        if inv[n] != target or hooks != target:
            witnesses.append({"n": n})
    return CheckReport("regular_representation", {"n_max": n_max}, not witnesses, witnesses)


def htoe_check(n_max: int) -> CheckReport:
    """h_n = (-1)^n sum over compositions nu of (-1)^len(nu) e_nu."""
    witnesses = []
    for n in range(n_max + 1):
        rhs = SymmetricFunction({}, n)
        for nu in compositions(n):
            lam = tuple(sorted(nu, reverse=True))
            rhs = rhs + basis_to_monomial("e", lam, n).scale((-1) ** (n + len(nu)))
        lhs = basis_to_monomial("h", (n,) if n else (), n)
        if lhs != rhs:
            witnesses.append({"n": n})
    return CheckReport("h_to_e", {"n_max": n_max}, not witnesses, witnesses)
