"""Exact sparse row reduction over the rationals.

Rows are ``dict[int, Rational]`` mapping column index to a nonzero value.
Values stay Python ``int`` for as long as possible and only become
``fractions.Fraction`` when a division is inexact; this keeps the common
case of +/-1 relation matrices fast.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional, Sequence

Row = dict


def _div(a, b):
    if isinstance(a, int) and isinstance(b, int):
        q, r = divmod(a, b)
        if r == 0:
            return q
        return Fraction(a, b)
    value = Fraction(a) / b
    return int(value) if value.denominator == 1 else value


def _normalize(v):
    if isinstance(v, Fraction) and v.denominator == 1:
        return int(v)
    return v


class Echelon:
    """Incrementally maintained echelon basis of a row space.

    Every stored row has a distinct leading column (its smallest column with
    respect to ``order``) and leading coefficient 1.  The set of leading
    columns depends only on the row space and the column order.
    """

    def __init__(self, order: Optional[Sequence[int]] = None):
        self._pos = None if order is None else {c: i for i, c in enumerate(order)}
        self.pivots: dict[int, Row] = {}

    def _key(self, col):
        return col if self._pos is None else self._pos[col]

    def _lead(self, row: Row) -> int:
        return min(row, key=self._key)

    def reduce(self, row: Row) -> Row:
        """Return ``row`` reduced against the stored pivots (leading terms only)."""
        row = dict(row)
        while row:
            lead = self._lead(row)
            piv = self.pivots.get(lead)
            if piv is None:
                break
            _axpy(row, -row[lead], piv)
        return row

    def add(self, row: Row) -> bool:
        """Insert ``row``; return True when it enlarged the row space."""
        row = self.reduce({c: v for c, v in row.items() if v})
        if not row:
            return False
        lead = self._lead(row)
        c = row[lead]
        if c != 1:
            row = {k: _div(v, c) for k, v in row.items()}
        self.pivots[lead] = row
        return True

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def full_reduce(self, row: Row) -> Row:
        """Reduce every pivot column out of ``row``, not only the leading one."""
        row = {c: v for c, v in row.items() if v}
        pending = sorted((c for c in row if c in self.pivots), key=self._key)
        while pending:
            col = pending.pop(0)
            coef = row.get(col)
            if not coef:
                continue
            piv = self.pivots[col]
            _axpy(row, -coef, piv)
            pending = sorted((c for c in row if c in self.pivots), key=self._key)
        return row

    def rref(self) -> dict[int, Row]:
        """Pivot rows with every other pivot column eliminated."""
        out: dict[int, Row] = {}
        for col in sorted(self.pivots, key=self._key, reverse=True):
            row = dict(self.pivots[col])
            for other in sorted((c for c in row if c != col and c in out), key=self._key):
                coef = row.get(other)
                if coef:
                    _axpy(row, -coef, out[other])
            out[col] = row
        return out


def _axpy(row: Row, a, other: Row) -> None:
    """row += a * other, dropping zeros."""
    for col, v in other.items():
        nv = row.get(col, 0) + a * v
        if nv:
            row[col] = _normalize(nv)
        else:
            row.pop(col, None)


def rank(rows: Iterable[Row]) -> int:
    ech = Echelon()
    for row in rows:
        ech.add(row)
    return ech.rank


def dense_rows(matrix: Sequence[Sequence]) -> list[Row]:
    return [{j: v for j, v in enumerate(r) if v} for r in matrix]


def solve_square(matrix: Sequence[Sequence], rhs: Sequence) -> list:
    """Solve ``matrix @ x = rhs`` exactly; ``matrix`` must be invertible."""
    n = len(matrix)
    aug = [[Fraction(v) for v in matrix[i]] + [Fraction(rhs[i])] for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            raise ValueError("singular matrix")
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [v / p for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [_normalize(aug[i][n]) for i in range(n)]
