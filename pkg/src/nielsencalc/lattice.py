"""Exact integer matrix algebra.

Matrices are immutable and hold Python ints, so there is no overflow regime.
A matrix with zero rows or zero columns is a valid object and stands for a
map to (or from) the trivial group.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import gcd
from typing import Iterable, Sequence


class LatticeError(ValueError):
    """Raised when an operation is applied outside its contract."""


@dataclass(frozen=True)
class IntMatrix:
    """Integer matrix of a homomorphism Z^cols -> Z^rows, stored row-major."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise LatticeError(f"negative shape {self.rows}x{self.cols}")
        if len(self.entries) != self.rows * self.cols:
            raise LatticeError(
                f"{len(self.entries)} entries do not fill a {self.rows}x{self.cols} matrix"
            )
        for x in self.entries:
            if isinstance(x, bool) or not isinstance(x, int):
                raise LatticeError(f"non-integer entry {x!r}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> IntMatrix:
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for i, r in enumerate(rows):
            if len(r) != cols:
                raise LatticeError(f"row {i} has {len(r)} entries, expected {cols}")
        return cls(len(rows), cols, tuple(x for r in rows for x in r))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> IntMatrix:
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def identity(cls, size: int) -> IntMatrix:
        return cls(size, size, tuple(int(i == j) for i in range(size) for j in range(size)))

    @classmethod
    def diagonal(cls, diag: Iterable[int], rows: int | None = None, cols: int | None = None) -> IntMatrix:
        diag = list(diag)
        rows = len(diag) if rows is None else rows
        cols = rows if cols is None else cols
        data = [[0] * cols for _ in range(rows)]
        for i, d in enumerate(diag):
            data[i][i] = d
        return cls.from_rows(data, cols)

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return self.entries[i * self.cols + j]

    def to_rows(self) -> list[list[int]]:
        c = self.cols
        return [list(self.entries[i * c:(i + 1) * c]) for i in range(self.rows)]

    def transpose(self) -> IntMatrix:
        return IntMatrix(
            self.cols, self.rows,
            tuple(self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)),
        )

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> IntMatrix:
        return IntMatrix.from_rows([[self[i, j] for j in col_idx] for i in row_idx], len(col_idx))

    def scaled(self, c: int) -> IntMatrix:
        return IntMatrix(self.rows, self.cols, tuple(c * x for x in self.entries))

    def __neg__(self) -> IntMatrix:
        return self.scaled(-1)

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise LatticeError(f"cannot multiply {self.shape} by {other.shape}")
        a, b = self.to_rows(), other.to_rows()
        out = [
            [sum(a[i][t] * b[t][j] for t in range(self.cols)) for j in range(other.cols)]
            for i in range(self.rows)
        ]
        return IntMatrix.from_rows(out, other.cols)

    def is_zero(self) -> bool:
        return not any(self.entries)

    def is_diagonal(self) -> bool:
        return all(self[i, j] == 0 for i in range(self.rows) for j in range(self.cols) if i != j)

    def __str__(self) -> str:
        return "; ".join(" ".join(str(x) for x in r) for r in self.to_rows())


@dataclass(frozen=True)
class SmithDecomposition:
    """Unimodular ``u``, ``v`` and diagonal ``s`` with ``u @ a @ v == s``."""

    u: IntMatrix
    v: IntMatrix
    s: IntMatrix
    factors: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.factors)


def _swap_rows(m, i, j):
    m[i], m[j] = m[j], m[i]


def _swap_cols(m, i, j):
    for row in m:
        row[i], row[j] = row[j], row[i]


def _add_row(m, dst, src, q):
    # row_dst += q * row_src
    rs, rd = m[src], m[dst]
    for c in range(len(rd)):
        rd[c] += q * rs[c]


def _add_col(m, dst, src, q):
    for row in m:
        row[dst] += q * row[src]


def smith_normal_form(a: IntMatrix) -> SmithDecomposition:
    """Smith normal form with transformation matrices.

    Pivots on the nonzero entry of least absolute value in the trailing
    block and clears its row and column by division with remainder; when
    the pivot fails to divide the rest of the block, the offending row is
    folded into the pivot row and the step repeats. Factors come out
    positive, each dividing the next.
    """
    m, n = a.rows, a.cols
    s = a.to_rows()
    u = IntMatrix.identity(m).to_rows()
    v = IntMatrix.identity(n).to_rows()

    for t in range(min(m, n)):
        while True:
            best = None
            for i in range(t, m):
                for j in range(t, n):
                    x = s[i][j]
                    if x and (best is None or abs(x) < abs(s[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                break
            bi, bj = best
            if bi != t:
                _swap_rows(s, t, bi)
                _swap_rows(u, t, bi)
            if bj != t:
                _swap_cols(s, t, bj)
                _swap_cols(v, t, bj)
            p = s[t][t]

            clean = True
            for i in range(t + 1, m):
                if s[i][t]:
                    q = s[i][t] // p
                    _add_row(s, i, t, -q)
                    _add_row(u, i, t, -q)
                    clean = clean and s[i][t] == 0
            for j in range(t + 1, n):
                if s[t][j]:
                    q = s[t][j] // p
                    _add_col(s, j, t, -q)
                    _add_col(v, j, t, -q)
                    clean = clean and s[t][j] == 0
            if not clean:
                continue

            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if s[i][j] % p),
                None,
            )
            if bad is None:
                break
            _add_row(s, t, bad, 1)
            _add_row(u, t, bad, 1)

        if s[t][t] < 0:
            s[t] = [-x for x in s[t]]
            u[t] = [-x for x in u[t]]
        if s[t][t] == 0:
            break

    factors = tuple(s[i][i] for i in range(min(m, n)) if s[i][i])
    return SmithDecomposition(
        u=IntMatrix.from_rows(u, m),
        v=IntMatrix.from_rows(v, n),
        s=IntMatrix.from_rows(s, n),
        factors=factors,
    )


def invariant_factors(a: IntMatrix) -> tuple[int, ...]:
    return smith_normal_form(a).factors


def rank(a: IntMatrix) -> int:
    return len(smith_normal_form(a).factors)


def det(a: IntMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    if a.rows != a.cols:
        raise LatticeError(f"determinant of non-square {a.rows}x{a.cols} matrix")
    n = a.rows
    m = a.to_rows()
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k]), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1] if n else 1


def minors(a: IntMatrix, k: int) -> Iterable[int]:
    """All k x k minors of ``a``."""
    for ri in combinations(range(a.rows), k):
        for ci in combinations(range(a.cols), k):
            yield det(a.submatrix(ri, ci))


def nonzero_minor_exists(a: IntMatrix, k: int) -> bool:
    """Whether some k x k minor is nonzero (k = 0 counts the empty minor, 1)."""
    if not 0 <= k <= min(a.rows, a.cols):
        raise LatticeError(f"minor size {k} out of range for {a.rows}x{a.cols} matrix")
    return any(minors(a, k))


def gcd_entries(a: IntMatrix) -> int:
    return gcd(*a.entries) if a.entries else 0
