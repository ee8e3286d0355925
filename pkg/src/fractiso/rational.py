"""Exact rationals and dense rational matrices."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Rational = Fraction


# Fractions are immutable, so the common small integers can be shared
_SMALL = {i: Fraction(i) for i in range(-16, 17)}


def to_rational(value) -> Fraction:
    """Coerce ints, Fractions, gmpy2 mpq values and ``p/q`` strings."""
    kind = type(value)
    if kind is Fraction:
        return value
    if kind is int:
        q = _SMALL.get(value)
        return Fraction(value) if q is None else q
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    num = getattr(value, "numerator", None)
    den = getattr(value, "denominator", None)
    if num is None or den is None or isinstance(value, float):
        raise TypeError(f"cannot convert {value!r} to an exact rational")
    return Fraction(int(num), int(den))


def format_rational(q) -> str:
    q = to_rational(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    if "." in text or "e" in text.lower():
        raise ValueError(f"not an exact rational: {text!r}")
    return Fraction(text)


class RationalMatrix:
    """Immutable dense matrix of exact rationals, stored row-major."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, rows: int, cols: int, entries: Iterable = ()):
        if rows < 0 or cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        data = tuple(to_rational(x) for x in entries)
        if len(data) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(data)}")
        self.rows = rows
        self.cols = cols
        self._data = data

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "RationalMatrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), cols, (x for r in rows for x in r))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RationalMatrix":
        return cls(rows, cols, [0] * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls(n, n, (1 if i == j else 0 for i in range(n) for j in range(n)))

    @classmethod
    def ones(cls, rows: int, cols: int | None = None) -> "RationalMatrix":
        cols = rows if cols is None else cols
        return cls(rows, cols, [1] * (rows * cols))

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def entries(self) -> tuple[Fraction, ...]:
        return self._data

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return self._data[i * self.cols + j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self._data[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(
            self.cols, self.rows,
            (self._data[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)),
        )

    T = property(transpose)

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        out = []
        ocols = [other._data[j::other.cols] for j in range(other.cols)] if other.cols else []
        for i in range(self.rows):
            r = self.row(i)
            nz = [(k, x) for k, x in enumerate(r) if x]
            for j in range(other.cols):
                col = ocols[j]
                out.append(sum((x * col[k] for k, x in nz), Fraction(0)))
        return RationalMatrix(self.rows, other.cols, out)

    def __add__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} + {other.shape}")
        return RationalMatrix(self.rows, self.cols, (a + b for a, b in zip(self._data, other._data)))

    def scale(self, c) -> "RationalMatrix":
        c = to_rational(c)
        return RationalMatrix(self.rows, self.cols, (c * x for x in self._data))

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self._data))

    def row_sums(self) -> list[Fraction]:
        return [sum(self.row(i), Fraction(0)) for i in range(self.rows)]

    def col_sums(self) -> list[Fraction]:
        return [sum(self._data[j::self.cols], Fraction(0)) for j in range(self.cols)] if self.cols else []

    def is_doubly_stochastic(self) -> bool:
        if self.rows != self.cols:
            return False
        if any(x < 0 for x in self._data):
            return False
        return all(s == 1 for s in self.row_sums()) and all(s == 1 for s in self.col_sums())

    def permuted(self, row_perm: Sequence[int], col_perm: Sequence[int]) -> "RationalMatrix":
        """Matrix whose (a, b) entry is self[row_perm[a], col_perm[b]]."""
        return RationalMatrix(
            len(row_perm), len(col_perm),
            (self[i, j] for i in row_perm for j in col_perm),
        )

    def __repr__(self) -> str:
        body = "; ".join(" ".join(format_rational(x) for x in self.row(i)) for i in range(self.rows))
        return f"RationalMatrix({self.rows}x{self.cols}: [{body}])"


def block_diagonal(blocks: Sequence[RationalMatrix]) -> RationalMatrix:
    n = sum(b.rows for b in blocks)
    m = sum(b.cols for b in blocks)
    out = [[Fraction(0)] * m for _ in range(n)]
    r0 = c0 = 0
    for b in blocks:
        for i in range(b.rows):
            for j in range(b.cols):
                out[r0 + i][c0 + j] = b[i, j]
        r0 += b.rows
        c0 += b.cols
    return RationalMatrix(n, m, (x for row in out for x in row))
