"""Exact rational scalars, dense linear algebra, and seeded rational sampling.

Every geometric predicate in this package bottoms out in the arithmetic here.
All values are arbitrary-precision rationals, so results are independent of
evaluation order and no pipeline ever rounds.  Floating point appears only in
the Fourier evaluation layer, never here.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import SingularMatrix

Rational = Fraction

#: Denominator used by sample_rational; coarse enough to be cheap, fine enough
#: that sampled points are generic with overwhelming probability.
DEFAULT_DENOMINATOR = 2**31

_MASK64 = (1 << 64) - 1


def rational(value: int | str | Fraction) -> Fraction:
    """Coerce an int, a Fraction, or a string like "p/q" to an exact rational.

    Floats are rejected on purpose: exact pipelines must opt in to binary
    float semantics explicitly (see transforms.fourier_transform).
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def format_rational(q: Fraction) -> str:
    """Serialize as "p/q", or just "p" when the denominator is 1."""
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class Matrix:
    """Immutable rectangular grid of exact rationals."""

    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        if not self.entries or not self.entries[0]:
            raise ValueError("matrix needs at least one row and one column")
        width = len(self.entries[0])
        if any(len(row) != width for row in self.entries):
            raise ValueError("matrix rows must all have the same length")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int | str | Fraction]]) -> "Matrix":
        return cls(tuple(tuple(rational(x) for x in row) for row in rows))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        zero = Fraction(0)
        return cls(tuple(tuple(zero for _ in range(cols)) for _ in range(rows)))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(
            tuple(
                tuple(Fraction(1 if i == j else 0) for j in range(n))
                for i in range(n)
            )
        )

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, index: tuple[int, int]) -> Fraction:
        i, j = index
        return self.entries[i][j]

    def __add__(self, other: "Matrix") -> "Matrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("matrix shapes differ")
        return Matrix(
            tuple(
                tuple(a + b for a, b in zip(ra, rb))
                for ra, rb in zip(self.entries, other.entries)
            )
        )

    def scaled(self, k: int | Fraction) -> "Matrix":
        k = rational(k)
        return Matrix(tuple(tuple(k * x for x in row) for row in self.entries))


def _integer_rows(m: Matrix) -> tuple[list[list[int]], Fraction]:
    """Clear denominators row by row; det(m) = det(int rows) / scale."""
    scale = Fraction(1)
    out: list[list[int]] = []
    for row in m.entries:
        mult = 1
        for x in row:
            mult = math.lcm(mult, x.denominator)
        out.append([int(x * mult) for x in row])
        scale *= mult
    return out, scale


def det(m: Matrix) -> Fraction:
    """Exact determinant via fraction-free (Bareiss) elimination.

    Rows are first scaled to integers so intermediate entries stay integral
    and bounded; the pivot is always the first nonzero entry in the column,
    trading speed for determinism.
    """
    if not m.is_square:
        raise ValueError("determinant requires a square matrix")
    a, scale = _integer_rows(m)
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        pivot_row = next((i for i in range(k, n) if a[i][k] != 0), None)
        if pivot_row is None:
            return Fraction(0)
        if pivot_row != k:
            a[k], a[pivot_row] = a[pivot_row], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return Fraction(sign * a[n - 1][n - 1], 1) / scale


def det_rows(rows: Sequence[Sequence[Fraction]]) -> Fraction:
    """det() for raw nested sequences, skipping Matrix construction."""
    return det(Matrix(tuple(tuple(row) for row in rows)))


def solve_linear(m: Matrix, rhs: Sequence[int | str | Fraction]) -> tuple[Fraction, ...]:
    """Solve m @ x = rhs exactly for square nonsingular m.

    Raises SingularMatrix when elimination finds no pivot for some column.
    """
    if not m.is_square:
        raise ValueError("solve_linear requires a square matrix")
    n = m.rows
    if len(rhs) != n:
        raise ValueError("right-hand side length does not match matrix size")
    a = [list(row) for row in m.entries]
    b = [rational(x) for x in rhs]
    for k in range(n):
        pivot_row = next((i for i in range(k, n) if a[i][k] != 0), None)
        if pivot_row is None:
            raise SingularMatrix("matrix is singular")
        if pivot_row != k:
            a[k], a[pivot_row] = a[pivot_row], a[k]
            b[k], b[pivot_row] = b[pivot_row], b[k]
        for i in range(k + 1, n):
            if a[i][k] == 0:
                continue
            factor = a[i][k] / a[k][k]
            for j in range(k, n):
                a[i][j] -= factor * a[k][j]
            b[i] -= factor * b[k]
    x = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        acc = b[i]
        for j in range(i + 1, n):
            acc -= a[i][j] * x[j]
        x[i] = acc / a[i][i]
    return tuple(x)


def invert(m: Matrix) -> Matrix:
    """Exact inverse via Gauss-Jordan; raises SingularMatrix."""
    if not m.is_square:
        raise ValueError("invert requires a square matrix")
    n = m.rows
    a = [list(row) for row in m.entries]
    inv = [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
    for k in range(n):
        pivot_row = next((i for i in range(k, n) if a[i][k] != 0), None)
        if pivot_row is None:
            raise SingularMatrix("matrix is singular")
        if pivot_row != k:
            a[k], a[pivot_row] = a[pivot_row], a[k]
            inv[k], inv[pivot_row] = inv[pivot_row], inv[k]
        pivot = a[k][k]
        a[k] = [x / pivot for x in a[k]]
        inv[k] = [x / pivot for x in inv[k]]
        for i in range(n):
            if i == k or a[i][k] == 0:
                continue
            factor = a[i][k]
            a[i] = [x - factor * y for x, y in zip(a[i], a[k])]
            inv[i] = [x - factor * y for x, y in zip(inv[i], inv[k])]
    return Matrix(tuple(tuple(row) for row in inv))


def _mix64(seed: int, index: int) -> int:
    # splitmix64 step; stable across platforms and Python versions
    z = (seed + (index + 1) * 0x9E3779B97F4A7C15) & _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return (z ^ (z >> 31)) & _MASK64


class RandomSource:
    """Seeded deterministic pseudo-random source.

    `split(i)` derives an independent child stream that depends only on
    (seed, i), so per-index work is reproducible regardless of evaluation
    order or parallelism.
    """

    def __init__(self, seed: int):
        self.seed = seed & _MASK64
        self._rng = random.Random(self.seed)

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi], endpoints included."""
        return self._rng.randint(lo, hi)

    def randrange(self, n: int) -> int:
        return self._rng.randrange(n)

    def split(self, index: int) -> "RandomSource":
        return RandomSource(_mix64(self.seed, index))

    def __repr__(self) -> str:
        return f"RandomSource(seed={self.seed})"


def sample_rational(
    lo: int | str | Fraction,
    hi: int | str | Fraction,
    source: RandomSource,
    max_denominator: int = DEFAULT_DENOMINATOR,
) -> Fraction:
    """Uniform-ish rational strictly inside (lo, hi), deterministic by seed."""
    lo = rational(lo)
    hi = rational(hi)
    if lo >= hi:
        raise ValueError(f"empty range: lo={lo} must be < hi={hi}")
    k = source.randint(1, max_denominator - 1)
    return lo + (hi - lo) * Fraction(k, max_denominator)
