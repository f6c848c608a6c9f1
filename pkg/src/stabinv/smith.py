"""Integer matrices: fraction-free determinants and Smith normal form."""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Sequence


@dataclass(frozen=True)
class IntMatrix:
    entries: tuple[tuple[int, ...], ...]

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "IntMatrix":
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("ragged rows")
        return cls(rows)

    @property
    def nrows(self) -> int:
        return len(self.entries)

    @property
    def ncols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.entries]


def determinant(m: IntMatrix) -> int:
    """Bareiss fraction-free elimination."""
    if not m.is_square:
        raise ValueError("determinant of a non-square matrix")
    a = m.tolist()
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def smith_normal_form(m: IntMatrix) -> list[int]:
    """Elementary divisors d1 | d2 | ... (zeros last) of a square integer
    matrix, by pivoting on entries of minimal absolute value."""
    if not m.is_square:
        raise ValueError(f"Smith normal form expects a square matrix, got {m.nrows}x{m.ncols}")
    a = m.tolist()
    n = len(a)
    diag = []
    for t in range(n):
        while True:
            nonzero = [(abs(a[i][j]), i, j) for i in range(t, n) for j in range(t, n) if a[i][j]]
            if not nonzero:
                break
            _, pi, pj = min(nonzero)
            a[t], a[pi] = a[pi], a[t]
            for row in a:
                row[t], row[pj] = row[pj], row[t]
            piv = a[t][t]
            done = True
            for i in range(t + 1, n):
                q = a[i][t] // piv
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                if a[i][t]:
                    done = False
            for j in range(t + 1, n):
                q = a[t][j] // piv
                if q:
                    for row in a:
                        row[j] -= q * row[t]
                if a[t][j]:
                    done = False
            if done:
                bad = next(((i, j) for i in range(t + 1, n) for j in range(t + 1, n)
                            if a[i][j] % piv), None)
                if bad is None:
                    break
                # pull the offending row in so the pivot shrinks next round
                i = bad[0]
                a[t] = [x + y for x, y in zip(a[t], a[i])]
        diag.append(abs(a[t][t]))
    return _divisor_chain(diag)


def _divisor_chain(diag: list[int]) -> list[int]:
    nonzero = [d for d in diag if d]
    zeros = len(diag) - len(nonzero)
    changed = True
    while changed:
        changed = False
        for i in range(len(nonzero)):
            for j in range(i + 1, len(nonzero)):
                a, b = nonzero[i], nonzero[j]
                if b % a:
                    g = gcd(a, b)
                    nonzero[i], nonzero[j] = g, a * b // g
                    changed = True
    return sorted(nonzero) + [0] * zeros
