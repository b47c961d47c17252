"""Elementary dissection moves and the collinear three-term relators.

The only move is splitting one simplex into two at a point interior to an
edge; its chain-level soundness (volume and moments preserved, measure
unchanged) is what every refinement test leans on.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CutNotOnOpenEdge, DegenerateConfiguration
from .exact import RandomSource, sample_rational
from .chains import SimplexChain
from .geometry import (
    OrientedSimplex,
    Point,
    as_point,
    is_codegenerate,
    orientation,
    vadd,
    vscale,
    vsub,
)


def elementary_split(
    s: OrientedSimplex, i: int, j: int, cut: Point
) -> tuple[OrientedSimplex, OrientedSimplex]:
    """Split s at a point strictly inside the edge between vertices i and j.

    Returns the two words obtained by replacing vertex j, then vertex i, with
    the cut point; their chain sum is measure-equal to s.
    """
    d = s.dim
    if not (0 <= i <= d and 0 <= j <= d) or i == j:
        raise ValueError(f"edge indices must be distinct and in range, got {i}, {j}")
    cut = as_point(cut)
    vi, vj = s.vertices[i], s.vertices[j]
    edge = vsub(vj, vi)
    rel = vsub(cut, vi)
    k0 = next(k for k, x in enumerate(edge) if x != 0)
    t = rel[k0] / edge[k0]
    if rel != vscale(edge, t) or not (0 < t < 1):
        raise CutNotOnOpenEdge(
            f"cut {cut} is not strictly between vertices {vi} and {vj}"
        )
    first = list(s.vertices)
    first[j] = cut
    second = list(s.vertices)
    second[i] = cut
    return OrientedSimplex(tuple(first)), OrientedSimplex(tuple(second))


@dataclass(frozen=True)
class SplitRelator:
    """Base points plus a collinear triple generating a measure-zero chain.

    The triple must be collinear and pairwise distinct, and joining the base
    with any two of its points must give a full-dimensional simplex.  The
    middle point usually lies between the others, but the cancellation does
    not require it, so that is not enforced.
    """

    base: tuple[Point, ...]
    collinear: tuple[Point, Point, Point]

    def __post_init__(self) -> None:
        x1, x2, x3 = self.collinear
        if len(set(self.collinear)) != 3:
            raise DegenerateConfiguration("collinear points must be distinct")
        d = len(x1)
        if len(self.base) != d - 1:
            raise DegenerateConfiguration(
                f"expected {d - 1} base points in dimension {d}"
            )
        e1, e2 = vsub(x2, x1), vsub(x3, x1)
        k0 = next((k for k, x in enumerate(e1) if x != 0), None)
        if k0 is None or vsub(vscale(e2, e1[k0]), vscale(e1, e2[k0])) != tuple(
            [0] * d
        ):
            raise DegenerateConfiguration("the three points are not collinear")
        for word in self._words():
            if orientation(OrientedSimplex(word)) == 0:
                raise DegenerateConfiguration(
                    f"relator word {word} is a flat simplex"
                )

    def _words(self) -> list[tuple[Point, ...]]:
        x1, x2, x3 = self.collinear
        return [
            self.base + (x1, x2),
            self.base + (x2, x3),
            self.base + (x3, x1),
        ]

    @property
    def dim(self) -> int:
        return len(self.collinear[0])


def relator_chain(r: SplitRelator) -> SimplexChain:
    """The cyclic three-term chain; measure-equal to the empty chain."""
    return SimplexChain.from_words(r.dim, ((1, word) for word in r._words()))


def random_refine(
    c: SimplexChain,
    steps: int,
    source: RandomSource,
    avoid_codegenerate: bool = True,
) -> SimplexChain:
    """Apply random elementary splits; result is measure-equal to c.

    Each step picks a random term, edge, and interior cut point.  When
    avoid_codegenerate is set, splits producing an origin-coplanar piece are
    redrawn (and the step skipped after repeated failures) so the refined
    chain stays usable by the duality map.
    """
    chain = c
    for step in range(steps):
        if not chain.terms:
            break
        child = source.split(step)
        for _ in range(24):
            coeff, s = chain.terms[child.randrange(len(chain.terms))]
            d = s.dim
            i = child.randrange(d + 1)
            j = child.randrange(d)
            if j >= i:
                j += 1
            t = sample_rational(0, 1, child, 2**16)
            cut = vadd(s.vertices[i], vscale(vsub(s.vertices[j], s.vertices[i]), t))
            try:
                a, b = elementary_split(s, i, j, cut)
            except CutNotOnOpenEdge:
                continue
            if avoid_codegenerate and (is_codegenerate(a) or is_codegenerate(b)):
                continue
            chain = chain + SimplexChain.from_terms(
                chain.dim, [(-coeff, s), (coeff, a), (coeff, b)]
            )
            break
    return chain
