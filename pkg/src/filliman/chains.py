"""Integer combinations of oriented simplices with measure semantics.

A chain is stored in canonical form: every kept simplex is a positively
oriented word (vertices sorted, last two swapped when needed), word
orientations are folded into the integer coefficients, flat simplices are
dropped, and terms over the same vertex set are merged.  Two chains are
measure-equal when their signed densities agree almost everywhere; that is
tested by exact low-order moments plus randomized generic-point evaluation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DimensionMismatch, ExhaustedSampling, NonGenericPoint
from .exact import Matrix, RandomSource, sample_rational
from .geometry import (
    OrientedSimplex,
    Point,
    _vertex_box,
    as_point,
    barycentric,
    moments,
    orientation,
    origin,
    translate_simplex,
    vadd,
)


def canonical_positive(vertices: Sequence[Point]) -> OrientedSimplex | None:
    """Positively oriented representative of a vertex set; None when flat."""
    word = tuple(sorted(vertices))
    s = OrientedSimplex(word)
    o = orientation(s)
    if o == 0:
        return None
    if o < 0:
        word = word[:-2] + (word[-1], word[-2])
        s = OrientedSimplex(word)
    return s


def _canonical_terms(
    dim: int, items: Iterable[tuple[int, OrientedSimplex]]
) -> tuple[tuple[int, OrientedSimplex], ...]:
    coeffs: dict[tuple[Point, ...], int] = {}
    canon: dict[tuple[Point, ...], OrientedSimplex] = {}
    for coeff, s in items:
        if s.dim != dim:
            raise DimensionMismatch(
                f"term of dimension {s.dim} in a chain of dimension {dim}"
            )
        if coeff == 0:
            continue
        o = orientation(s)
        if o == 0:
            continue  # zero-volume words carry no measure
        key = tuple(sorted(s.vertices))
        if key not in canon:
            rep = canonical_positive(key)
            assert rep is not None
            canon[key] = rep
        coeffs[key] = coeffs.get(key, 0) + coeff * o
    return tuple(
        (coeffs[key], canon[key]) for key in sorted(coeffs) if coeffs[key] != 0
    )


@dataclass(frozen=True)
class SimplexChain:
    """Canonical integer combination of positively oriented simplices."""

    dim: int
    terms: tuple[tuple[int, OrientedSimplex], ...]

    @classmethod
    def empty(cls, dim: int) -> "SimplexChain":
        return cls(dim, ())

    @classmethod
    def from_terms(
        cls, dim: int, items: Iterable[tuple[int, OrientedSimplex]]
    ) -> "SimplexChain":
        return cls(dim, _canonical_terms(dim, items))

    @classmethod
    def from_words(
        cls,
        dim: int,
        items: Iterable[tuple[int, Iterable[Iterable]]],
    ) -> "SimplexChain":
        return cls.from_terms(
            dim,
            (
                (coeff, OrientedSimplex(tuple(as_point(v) for v in word)))
                for coeff, word in items
            ),
        )

    @classmethod
    def of(cls, s: OrientedSimplex, coeff: int = 1) -> "SimplexChain":
        return cls.from_terms(s.dim, [(coeff, s)])

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: "SimplexChain") -> "SimplexChain":
        if self.dim != other.dim:
            raise DimensionMismatch(
                f"cannot add chains of dimensions {self.dim} and {other.dim}"
            )
        return SimplexChain.from_terms(self.dim, self.terms + other.terms)

    def __neg__(self) -> "SimplexChain":
        return SimplexChain(self.dim, tuple((-c, s) for c, s in self.terms))

    def __sub__(self, other: "SimplexChain") -> "SimplexChain":
        return self + (-other)

    def scaled(self, k: int) -> "SimplexChain":
        if k == 0:
            return SimplexChain.empty(self.dim)
        return SimplexChain(self.dim, tuple((k * c, s) for c, s in self.terms))

    def translated(self, shift: Point) -> "SimplexChain":
        return SimplexChain(
            self.dim, tuple((c, translate_simplex(s, shift)) for c, s in self.terms)
        )


def add(a: SimplexChain, b: SimplexChain) -> SimplexChain:
    return a + b


def negate(a: SimplexChain) -> SimplexChain:
    return -a


def scale(a: SimplexChain, k: int) -> SimplexChain:
    return a.scaled(k)


def multiplicity(c: SimplexChain, p: Point) -> int:
    """Net coefficient of the terms strictly containing p.

    Raises NonGenericPoint when p lies on any term's boundary; callers are
    expected to resample.
    """
    total = 0
    for coeff, s in c.terms:
        lo, hi = _vertex_box(s)
        if any(x < a or x > b for x, a, b in zip(p, lo, hi)):
            continue
        lam = barycentric(s, p)
        if any(x < 0 for x in lam):
            continue
        if any(x == 0 for x in lam):
            raise NonGenericPoint(f"point {p} lies on the boundary of a term")
        total += coeff
    return total


@dataclass(frozen=True)
class MomentSignature:
    """Exact integrals of 1, x, and x x^T against the chain's measure."""

    total: Fraction
    first: Point
    second: Matrix

    def __add__(self, other: "MomentSignature") -> "MomentSignature":
        return MomentSignature(
            self.total + other.total,
            vadd(self.first, other.first),
            self.second + other.second,
        )

    def scaled(self, k: int | Fraction) -> "MomentSignature":
        return MomentSignature(
            self.total * k,
            tuple(x * k for x in self.first),
            self.second.scaled(k),
        )

    @classmethod
    def zero(cls, dim: int) -> "MomentSignature":
        return cls(Fraction(0), origin(dim), Matrix.zeros(dim, dim))


def moment_signature(c: SimplexChain) -> MomentSignature:
    """Integer-weighted sum of per-simplex moments; exact and additive."""
    sig = MomentSignature.zero(c.dim)
    for coeff, s in c.terms:
        vol, first, second = moments(s)
        sig = sig + MomentSignature(vol, first, second).scaled(coeff)
    return sig


def bounding_box(c: SimplexChain) -> tuple[Point, Point] | None:
    """Componentwise bounds over all term vertices; None for the empty chain."""
    if not c.terms:
        return None
    boxes = [_vertex_box(s) for _, s in c.terms]
    lo = tuple(min(b[0][k] for b in boxes) for k in range(c.dim))
    hi = tuple(max(b[1][k] for b in boxes) for k in range(c.dim))
    return lo, hi


@dataclass(frozen=True)
class MeasureVerdict:
    """Outcome of a measure-equality test.

    Equal verdicts are one-sided: they report how many generic witnesses were
    tried.  Unequal verdicts are exact; the witness point may be absent when
    the difference was caught by the moment signatures alone.
    """

    equal: bool
    witness: Point | None
    samples_tested: int
    detail: str

    def __bool__(self) -> bool:
        return self.equal


#: Sampling denominator for witness points; coarser than the global default to
#: keep repeated exact evaluation cheap.
_WITNESS_DENOMINATOR = 2**20


def measure_equal(
    a: SimplexChain,
    b: SimplexChain,
    samples: int,
    source: RandomSource,
    max_denominator: int = _WITNESS_DENOMINATOR,
) -> MeasureVerdict:
    """Test whether two chains define the same signed measure.

    The exact moment signatures are compared first (a necessary condition);
    then the multiplicity of a - b is evaluated at `samples` generic points
    of the joint bounding box, resampling whenever a draw lands on a term
    boundary.  Each sample index gets its own split of `source`, so results
    do not depend on evaluation order.
    """
    if a.dim != b.dim:
        raise DimensionMismatch(
            f"cannot compare chains of dimensions {a.dim} and {b.dim}"
        )
    diff = a - b
    if not diff.terms:
        return MeasureVerdict(True, None, 0, "identical canonical forms")
    moments_match = moment_signature(diff) == MomentSignature.zero(diff.dim)
    box = bounding_box(diff)
    assert box is not None
    lo, hi = box
    tested = 0
    for index in range(samples):
        child = source.split(index)
        for _ in range(100):
            p = tuple(
                sample_rational(lo[k], hi[k], child, max_denominator)
                for k in range(diff.dim)
            )
            try:
                value = multiplicity(diff, p)
            except NonGenericPoint:
                continue
            tested += 1
            if value != 0:
                return MeasureVerdict(
                    False, p, tested, f"net multiplicity {value} at witness"
                )
            break
        else:
            raise ExhaustedSampling(
                "could not find a generic sample point in 100 attempts"
            )
    if not moments_match:
        return MeasureVerdict(
            False,
            None,
            tested,
            "moment signatures differ (no witness found in the sample budget)",
        )
    return MeasureVerdict(
        True, None, tested, f"moments equal; {tested} generic samples all zero"
    )
