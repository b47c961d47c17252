"""Points, hyperplanes, oriented simplices, and their exact predicates.

A simplex is an ordered word of d+1 points in dimension d.  The word denotes
the positively signed region when the edge vectors from its first vertex form
a positively oriented basis, and the negated region otherwise; chains fold
that sign into their coefficients.  The origin is always the coordinate
origin: callers with a different reference point translate their data first.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, Sequence

from .errors import DegenerateSimplex
from .exact import Matrix, det_rows, invert, rational

Point = tuple[Fraction, ...]


def point(*coords: int | str | Fraction) -> Point:
    return tuple(rational(c) for c in coords)


def as_point(coords: Iterable[int | str | Fraction]) -> Point:
    return tuple(rational(c) for c in coords)


def vadd(a: Point, b: Point) -> Point:
    return tuple(x + y for x, y in zip(a, b))


def vsub(a: Point, b: Point) -> Point:
    return tuple(x - y for x, y in zip(a, b))


def vscale(a: Point, k: Fraction | int) -> Point:
    k = rational(k)
    return tuple(k * x for x in a)


def vdot(a: Point, b: Point) -> Fraction:
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def origin(dim: int) -> Point:
    return tuple(Fraction(0) for _ in range(dim))


def translate_point(p: Point, shift: Point) -> Point:
    return vadd(p, shift)


@dataclass(frozen=True)
class Hyperplane:
    """The locus <normal, x> = offset; normal must be nonzero."""

    normal: Point
    offset: Fraction

    def __post_init__(self) -> None:
        if all(x == 0 for x in self.normal):
            raise ValueError("hyperplane normal must be nonzero")

    def evaluate(self, x: Point) -> Fraction:
        """<normal, x> - offset; zero exactly on the hyperplane."""
        return vdot(self.normal, x) - self.offset

    def contains_origin(self) -> bool:
        return self.offset == 0

    def canonical(self) -> "Hyperplane":
        """Scale by the leading coefficient's absolute value (orientation kept)."""
        lead = next(x for x in self.normal if x != 0)
        k = 1 / abs(lead)
        return Hyperplane(vscale(self.normal, k), k * self.offset)


@dataclass(frozen=True)
class OrientedSimplex:
    """Ordered word of d+1 points in dimension d; may be degenerate."""

    vertices: tuple[Point, ...]

    def __post_init__(self) -> None:
        if len(self.vertices) < 2:
            raise ValueError("a simplex needs at least two vertices")
        d = len(self.vertices) - 1
        if any(len(v) != d for v in self.vertices):
            raise ValueError(f"expected {d + 1} vertices of dimension {d}")

    @property
    def dim(self) -> int:
        return len(self.vertices) - 1


def simplex(*vertices: Iterable[int | str | Fraction]) -> OrientedSimplex:
    return OrientedSimplex(tuple(as_point(v) for v in vertices))


class Region(Enum):
    INSIDE = "inside"
    BOUNDARY = "boundary"
    OUTSIDE = "outside"


def edge_rows(s: OrientedSimplex) -> list[Point]:
    base = s.vertices[0]
    return [vsub(v, base) for v in s.vertices[1:]]


def edge_determinant(s: OrientedSimplex) -> Fraction:
    return det_rows(edge_rows(s))


def orientation(s: OrientedSimplex) -> int:
    """Sign of the edge-vector determinant: +1, -1, or 0 when degenerate."""
    d = edge_determinant(s)
    return (d > 0) - (d < 0)


def volume(s: OrientedSimplex) -> Fraction:
    """Unsigned volume |det| / d!; zero for degenerate words."""
    return abs(edge_determinant(s)) / factorial(s.dim)


@lru_cache(maxsize=16384)
def _affine_inverse(s: OrientedSimplex) -> Matrix | None:
    """Inverse of the affine vertex matrix, or None when the simplex is flat.

    Row 0 enforces the barycentric sum; the remaining rows hold coordinates,
    one column per vertex.  barycentric(p) = inverse @ (1, *p).
    """
    d = s.dim
    rows = [tuple(Fraction(1) for _ in range(d + 1))]
    for k in range(d):
        rows.append(tuple(v[k] for v in s.vertices))
    try:
        return invert(Matrix(tuple(rows)))
    except Exception:
        return None


@lru_cache(maxsize=16384)
def _vertex_box(s: OrientedSimplex) -> tuple[Point, Point]:
    lo = tuple(min(v[k] for v in s.vertices) for k in range(s.dim))
    hi = tuple(max(v[k] for v in s.vertices) for k in range(s.dim))
    return lo, hi


def barycentric(s: OrientedSimplex, p: Point) -> tuple[Fraction, ...]:
    """Unique weights with sum 1 whose vertex combination reproduces p."""
    inv = _affine_inverse(s)
    if inv is None:
        raise DegenerateSimplex(f"flat simplex {s.vertices}")
    rhs = (Fraction(1),) + tuple(p)
    return tuple(
        sum((row[j] * rhs[j] for j in range(len(rhs))), Fraction(0))
        for row in inv.entries
    )


def contains(s: OrientedSimplex, p: Point) -> Region:
    """Classify p against the closed simplex via barycentric signs."""
    lo, hi = _vertex_box(s)
    if any(x < a or x > b for x, a, b in zip(p, lo, hi)):
        return Region.OUTSIDE
    lam = barycentric(s, p)
    if any(x < 0 for x in lam):
        return Region.OUTSIDE
    if any(x == 0 for x in lam):
        return Region.BOUNDARY
    return Region.INSIDE


def origin_barycentric(s: OrientedSimplex) -> tuple[Fraction, ...]:
    return barycentric(s, origin(s.dim))


def is_codegenerate(s: OrientedSimplex) -> bool:
    """True iff some facet hyperplane of s passes through the origin.

    Equivalent to a zero barycentric coordinate of the origin, and to linear
    dependence of some d-subset of the vertices.
    """
    return any(x == 0 for x in origin_barycentric(s))


def moments(s: OrientedSimplex) -> tuple[Fraction, Point, Matrix]:
    """(volume, first moment, second moment) of the unsigned simplex.

    first = volume * centroid.  second uses the closed form
    volume / ((d+1)(d+2)) * (sum_i v_i v_i^T + (sum_i v_i)(sum_i v_i)^T),
    validated against a Monte-Carlo oracle in the test suite.
    """
    d = s.dim
    vol = volume(s)
    if vol == 0:
        return vol, origin(d), Matrix.zeros(d, d)
    total = s.vertices[0]
    for v in s.vertices[1:]:
        total = vadd(total, v)
    first = vscale(total, vol / (d + 1))
    coeff = vol / ((d + 1) * (d + 2))
    second = [[Fraction(0)] * d for _ in range(d)]
    for i in range(d):
        for j in range(d):
            acc = total[i] * total[j]
            for v in s.vertices:
                acc += v[i] * v[j]
            second[i][j] = coeff * acc
    return vol, first, Matrix(tuple(tuple(row) for row in second))


def translate_simplex(s: OrientedSimplex, shift: Point) -> OrientedSimplex:
    return OrientedSimplex(tuple(vadd(v, shift) for v in s.vertices))


def points_box(points: Sequence[Point]) -> tuple[Point, Point]:
    """Componentwise (min, max) corners of a nonempty point set."""
    dim = len(points[0])
    lo = tuple(min(p[k] for p in points) for k in range(dim))
    hi = tuple(max(p[k] for p in points) for k in range(dim))
    return lo, hi
