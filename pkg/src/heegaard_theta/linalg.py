"""Exact dense linear algebra over :class:`fractions.Fraction`.

Matrices are small (one row per alpha curve), so plain Gaussian elimination
is used throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import ParseError, SingularMatrix

Rational = Fraction


def parse_rational(value) -> Fraction:
    """Convert an int, a ``"p/q"`` string or a finite decimal literal exactly.

    Floats are refused: by the time a value is a float it is no longer exact.
    """
    if isinstance(value, bool):
        raise ParseError(f"not a number: {value!r}")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"not an exact rational literal: {value!r}") from exc
    raise ParseError(f"not an exact rational literal: {value!r}")


def format_rational(q: Fraction) -> str:
    return str(Fraction(q))


@dataclass(frozen=True)
class RatMatrix:
    rows: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        n = len(self.rows)
        if any(len(r) != n for r in self.rows):
            raise ValueError("matrix must be square")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable]) -> "RatMatrix":
        return cls(tuple(tuple(Fraction(x) for x in r) for r in rows))

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)])

    @property
    def size(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.rows[i][j]

    def at(self, i: int, j: int) -> Fraction:
        """1-based access, matching alpha_i / beta_j numbering."""
        return self.rows[i - 1][j - 1]

    def __matmul__(self, other: "RatMatrix") -> "RatMatrix":
        n = self.size
        return RatMatrix.from_rows(
            [[sum((self.rows[i][k] * other.rows[k][j] for k in range(n)), Fraction(0))
              for j in range(n)] for i in range(n)]
        )

    def transpose(self) -> "RatMatrix":
        return RatMatrix(tuple(zip(*self.rows))) if self.rows else self

    def tolist(self) -> list[list[Fraction]]:
        return [list(r) for r in self.rows]


def _as_lists(m: RatMatrix | Sequence[Sequence]) -> list[list[Fraction]]:
    rows = m.rows if isinstance(m, RatMatrix) else m
    return [[Fraction(x) for x in r] for r in rows]


def mat_det(m: RatMatrix | Sequence[Sequence]) -> Fraction:
    a = _as_lists(m)
    n = len(a)
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        p = a[col][col]
        det *= p
        for r in range(col + 1, n):
            f = a[r][col] / p
            if f:
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return det


def mat_inverse(m: RatMatrix | Sequence[Sequence]) -> RatMatrix:
    a = _as_lists(m)
    n = len(a)
    inv = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            raise SingularMatrix("matrix is singular")
        a[col], a[pivot] = a[pivot], a[col]
        inv[col], inv[pivot] = inv[pivot], inv[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        inv[col] = [x / p for x in inv[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
                inv[r] = [x - f * y for x, y in zip(inv[r], inv[col])]
    return RatMatrix.from_rows(inv)
