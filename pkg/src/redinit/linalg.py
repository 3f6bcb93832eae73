"""Exact linear algebra over F_p or Q.

Vectors are sparse dicts ``{column: value}`` whose columns may be any
hashable (monomials, exterior monomials, ints).  Dense matrices are lists of
lists.
"""

from __future__ import annotations

from typing import Callable, Hashable, Iterable

from .field import Field


class RowEchelon:
    """Incrementally maintained reduced row-echelon form.

    ``colkey`` ranks columns: the pivot of a row is its column with the
    smallest key.  Pivot rows are kept monic and mutually reduced.
    """

    def __init__(self, field: Field, colkey: Callable[[Hashable], object] | None = None):
        self.field = field
        self.colkey = colkey
        self.pivots: dict = {}

    def __len__(self):
        return len(self.pivots)

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, row: dict) -> dict:
        p = self.field.characteristic
        F = self.field
        r = dict(row)
        for col in [c for c in r if c in self.pivots]:
            a = r.get(col)
            if not a:
                continue
            for c, v in self.pivots[col].items():
                x = r.get(c, 0) - a * v
                if p:
                    x %= p
                else:
                    x = F(x)
                if x:
                    r[c] = x
                else:
                    r.pop(c, None)
        return r

    def add(self, row: dict) -> bool:
        """Insert ``row``; return True when it raised the rank."""
        r = self.reduce(row)
        if not r:
            return False
        F = self.field
        p = F.characteristic
        pc = min(r, key=self.colkey) if self.colkey else min(r)
        inv = F.inv(r[pc])
        if p:
            r = {c: v * inv % p for c, v in r.items()}
        else:
            r = {c: F(v * inv) for c, v in r.items()}
        for prow in self.pivots.values():
            a = prow.get(pc)
            if a:
                for c, v in r.items():
                    x = prow.get(c, 0) - a * v
                    if p:
                        x %= p
                    else:
                        x = F(x)
                    if x:
                        prow[c] = x
                    else:
                        prow.pop(c, None)
        self.pivots[pc] = r
        return True

    def extend(self, rows: Iterable[dict]) -> int:
        return sum(self.add(r) for r in rows)

    def contains(self, row: dict) -> bool:
        return not self.reduce(row)

    def basis(self) -> list[dict]:
        """Pivot rows ordered by pivot key."""
        keys = sorted(self.pivots, key=self.colkey) if self.colkey else sorted(self.pivots)
        return [self.pivots[k] for k in keys]

    def pivot_columns(self) -> list:
        return sorted(self.pivots, key=self.colkey) if self.colkey else sorted(self.pivots)


def rank(rows: Iterable[dict], field: Field) -> int:
    ech = RowEchelon(field)
    return ech.extend(rows)


def _dense_rows(matrix, field):
    return [[field(x) for x in row] for row in matrix]


def determinant(matrix, field: Field):
    a = _dense_rows(matrix, field)
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("determinant of a non-square matrix")
    p = field.characteristic
    det = field.one
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            return field.zero
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        pv = a[col][col]
        det = det * pv
        inv = field.inv(pv)
        for r in range(col + 1, n):
            f = a[r][col]
            if f:
                f = f * inv
                row, prow = a[r], a[col]
                for c in range(col, n):
                    row[c] = row[c] - f * prow[c]
                    if p:
                        row[c] %= p
    return field(det)


def inverse(matrix, field: Field) -> list[list]:
    a = _dense_rows(matrix, field)
    n = len(a)
    aug = [row + [field.one if i == j else field.zero for j in range(n)] for i, row in enumerate(a)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col]), None)
        if piv is None:
            raise ZeroDivisionError("matrix is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = field.inv(aug[col][col])
        aug[col] = [field(x * inv) for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [field(x - f * y) for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def matmul(a, b, field: Field) -> list[list]:
    cols = list(zip(*b))
    return [[field(sum(x * y for x, y in zip(row, col))) for col in cols] for row in a]
