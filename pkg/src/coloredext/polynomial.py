"""Univariate polynomials in t with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

Number = Union[int, Fraction]


def _clean(v):
    if isinstance(v, Fraction) and v.denominator == 1:
        return int(v)
    return v


class PolynomialT:
    """Dense coefficient list, lowest degree first, trailing zeros stripped."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Number] = ()):
        c = [_clean(Fraction(v)) if not isinstance(v, int) else v for v in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple = tuple(c)

    @classmethod
    def t(cls) -> "PolynomialT":
        return cls([0, 1])

    @classmethod
    def const(cls, v: Number) -> "PolynomialT":
        return cls([v])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def _coerce(self, other) -> "PolynomialT":
        return other if isinstance(other, PolynomialT) else PolynomialT([other])

    def __add__(self, other):
        other = self._coerce(other)
        m = max(len(self.coeffs), len(other.coeffs))
        return PolynomialT(self[i] + other[i] for i in range(m))

    __radd__ = __add__

    def __neg__(self):
        return PolynomialT(-v for v in self.coeffs)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        if not self.coeffs or not other.coeffs:
            return PolynomialT()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return PolynomialT(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = PolynomialT([1])
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = PolynomialT([other])
        if not isinstance(other, PolynomialT):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, x: Number):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return _clean(acc) if isinstance(acc, Fraction) else acc

    def __repr__(self):
        if not self.coeffs:
            return "0"
        out = ""
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            mag = abs(c)
            body = f"{mag}{mono}" if (mag != 1 or not mono) else mono
            if not out:
                out = ("-" if c < 0 else "") + body
            else:
                out += (" - " if c < 0 else " + ") + body
        return out

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]


def series_inverse(coeffs: Sequence[PolynomialT], order: int) -> list[PolynomialT]:
    """Inverse of sum coeffs[j] y^j (ordinary series, constant term 1) through y^order."""
    if coeffs[0] != 1:
        raise ValueError("constant term must be 1")
    inv = [PolynomialT([1])]
    for n in range(1, order + 1):
        acc = PolynomialT()
        for j in range(1, n + 1):
            if j < len(coeffs):
                acc = acc + coeffs[j] * inv[n - j]
        inv.append(-acc)
    return inv
