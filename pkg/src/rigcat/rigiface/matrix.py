"""Exact rational matrices for the skeletal rig category of matrices.

A morphism m -> n is an n x m matrix (columns index the domain).
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Iterable, Sequence

from ..finperm import DomainMismatch, Perm


class NonInvertible(ValueError):
    pass


class ExactMatrix:
    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Iterable[Iterable] = ()):
        grid = tuple(tuple(Fraction(e) for e in row) for row in entries)
        if len(grid) != rows or any(len(r) != cols for r in grid):
            raise ValueError(f"entry grid does not have shape {rows}x{cols}")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", grid)

    @classmethod
    def _trusted(cls, rows, cols, grid) -> "ExactMatrix":
        obj = object.__new__(cls)
        object.__setattr__(obj, "rows", rows)
        object.__setattr__(obj, "cols", cols)
        object.__setattr__(obj, "entries", grid)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("ExactMatrix is immutable")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "ExactMatrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        return cls(len(rows), ncols, rows)

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        one, zero = Fraction(1), Fraction(0)
        return cls._trusted(n, n, tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "ExactMatrix":
        z = Fraction(0)
        return cls._trusted(rows, cols, tuple((z,) * cols for _ in range(rows)))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.rows == other.rows and self.cols == other.cols and self.entries == other.entries

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise DomainMismatch(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        zero = Fraction(0)
        brows = other.entries
        out = []
        for row in self.entries:
            acc = [zero] * other.cols
            for k, a in enumerate(row):
                if a:
                    for j, b in enumerate(brows[k]):
                        if b:
                            acc[j] += a * b
            out.append(tuple(acc))
        return ExactMatrix._trusted(self.rows, other.cols, tuple(out))

    def direct_sum(self, other: "ExactMatrix") -> "ExactMatrix":
        z = Fraction(0)
        top = tuple(r + (z,) * other.cols for r in self.entries)
        bottom = tuple((z,) * self.cols + r for r in other.entries)
        return ExactMatrix._trusted(self.rows + other.rows, self.cols + other.cols, top + bottom)

    def block_product(self, other: "ExactMatrix") -> "ExactMatrix":
        """A • B: the block matrix whose (i, j) block is A b_ij."""
        a, b = self, other
        out = []
        for brow in b.entries:
            for arow in a.entries:
                out.append(tuple(bij * x for bij in brow for x in arow))
        return ExactMatrix._trusted(a.rows * b.rows, a.cols * b.cols, tuple(out))

    def inverse(self) -> "ExactMatrix":
        n = self.rows
        if n != self.cols:
            raise NonInvertible(f"{self.rows}x{self.cols} matrix is not square")
        aug = [list(r) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(self.entries)]
        for col in range(n):
            pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
            if pivot is None:
                raise NonInvertible("matrix is singular")
            aug[col], aug[pivot] = aug[pivot], aug[col]
            pv = aug[col][col]
            aug[col] = [x / pv for x in aug[col]]
            for r in range(n):
                if r != col and aug[r][col] != 0:
                    f = aug[r][col]
                    aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
        return ExactMatrix._trusted(n, n, tuple(tuple(r[n:]) for r in aug))

    def is_invertible(self) -> bool:
        try:
            self.inverse()
        except NonInvertible:
            return False
        return True

    def to_literal(self) -> list:
        return [[_fmt(x) for x in row] for row in self.entries]

    def __repr__(self):
        return f"ExactMatrix({self.rows}, {self.cols}, {self.to_literal()})"

    def __str__(self):
        body = ",".join("[" + ",".join(_fmt(x) for x in row) + "]" for row in self.entries)
        return f"[{body}]_{self.rows}x{self.cols}"


def _fmt(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def perm_matrix(p: Perm) -> ExactMatrix:
    """P(σ) with P_ij = δ_{i, σ(j)}."""
    n = p.degree
    one, zero = Fraction(1), Fraction(0)
    grid = [[zero] * n for _ in range(n)]
    for j, i in enumerate(p.table):
        grid[i - 1][j] = one
    return ExactMatrix._trusted(n, n, tuple(tuple(r) for r in grid))


def matrix_from_literal(rows: Sequence[Sequence], shape: tuple[int, int] | None = None) -> ExactMatrix:
    """Entries may be ints or strings such as ``"3/4"``."""
    if shape is not None:
        return ExactMatrix(shape[0], shape[1], [[Fraction(x) for x in r] for r in rows])
    return ExactMatrix.from_rows([[Fraction(x) for x in r] for r in rows])


def random_matrix(rows: int, cols: int, rng: random.Random, lo: int = -2, hi: int = 2) -> ExactMatrix:
    return ExactMatrix(rows, cols, [[rng.randint(lo, hi) for _ in range(cols)] for _ in range(rows)])


def random_invertible(n: int, rng: random.Random) -> ExactMatrix:
    while True:
        m = random_matrix(n, n, rng, -3, 3)
        if m.is_invertible():
            return m
