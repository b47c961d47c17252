"""Seeded random geometric data for property tests and verification runs.

Coordinates default to small denominators so downstream exact arithmetic
stays fast; degenerate or codegenerate draws are rejected and redrawn.
"""

from __future__ import annotations

from .errors import DegenerateConfiguration, NotFullDimensional
from .exact import RandomSource, sample_rational
from .chains import SimplexChain
from .convex import (
    ConvexPolytope,
    Region,
    convex_hull,
    polar_body,
    polytope_is_codegenerate,
    region_of_point,
)
from .dissection import SplitRelator
from .geometry import (
    OrientedSimplex,
    Point,
    is_codegenerate,
    orientation,
    origin,
    vadd,
    vscale,
    vsub,
)

_CAP = 1000


def random_rational_point(
    dim: int,
    source: RandomSource,
    lo: int = -4,
    hi: int = 4,
    max_denominator: int = 64,
) -> Point:
    return tuple(
        sample_rational(lo, hi, source, max_denominator) for _ in range(dim)
    )


def random_simplex(dim: int, source: RandomSource, **kwargs) -> OrientedSimplex:
    """Random non-degenerate simplex."""
    for _ in range(_CAP):
        s = OrientedSimplex(
            tuple(random_rational_point(dim, source, **kwargs) for _ in range(dim + 1))
        )
        if orientation(s) != 0:
            return s
    raise DegenerateConfiguration("could not sample a non-degenerate simplex")


def random_noncodegenerate_simplex(
    dim: int, source: RandomSource, **kwargs
) -> OrientedSimplex:
    for _ in range(_CAP):
        s = random_simplex(dim, source, **kwargs)
        if not is_codegenerate(s):
            return s
    raise DegenerateConfiguration("could not sample a non-codegenerate simplex")


def random_chain(
    dim: int,
    source: RandomSource,
    max_terms: int = 6,
    coeff_lo: int = -3,
    coeff_hi: int = 3,
    **kwargs,
) -> SimplexChain:
    """Random nonempty chain of non-codegenerate simplices."""
    for _ in range(_CAP):
        n = source.randint(1, max_terms)
        terms = []
        for _ in range(n):
            coeff = 0
            while coeff == 0:
                coeff = source.randint(coeff_lo, coeff_hi)
            terms.append(
                (coeff, random_noncodegenerate_simplex(dim, source, **kwargs))
            )
        chain = SimplexChain.from_terms(dim, terms)
        if chain.terms:
            return chain
    raise DegenerateConfiguration("could not sample a nonempty chain")


def random_polytope(
    dim: int,
    source: RandomSource,
    n_points: int | None = None,
    origin_interior: bool = True,
    **kwargs,
) -> ConvexPolytope:
    """Random full-dimensional polytope, by default strictly containing 0."""
    if n_points is None:
        n_points = {1: 3, 2: 7, 3: 8, 4: 9}.get(dim, 2 * dim + 2)
    for _ in range(_CAP):
        pts = [random_rational_point(dim, source, **kwargs) for _ in range(n_points)]
        try:
            p = convex_hull(pts)
        except NotFullDimensional:
            continue
        if polytope_is_codegenerate(p):
            continue
        if origin_interior and region_of_point(p, origin(dim)) is not Region.INSIDE:
            continue
        return p
    raise DegenerateConfiguration("could not sample a valid polytope")


def _is_simplicial(p: ConvexPolytope) -> bool:
    return all(len(f.vertex_indices) == p.dim for f in p.facets)


def random_simple_polytope(
    dim: int, source: RandomSource, **kwargs
) -> ConvexPolytope:
    """Random simple polytope containing the origin.

    In the plane every polygon qualifies; in higher dimension the polar of a
    random simplicial polytope is used.
    """
    if dim <= 2:
        return random_polytope(dim, source, **kwargs)
    for _ in range(_CAP):
        p = random_polytope(dim, source, **kwargs)
        if _is_simplicial(p):
            return polar_body(p)
    raise DegenerateConfiguration("could not sample a simple polytope")


def random_relator(
    dim: int,
    source: RandomSource,
    require_noncodegenerate: bool = True,
    **kwargs,
) -> SplitRelator:
    """Random split relator with the middle point strictly inside the segment."""
    for _ in range(_CAP):
        base = tuple(random_rational_point(dim, source, **kwargs) for _ in range(dim - 1))
        x1 = random_rational_point(dim, source, **kwargs)
        x3 = random_rational_point(dim, source, **kwargs)
        t = sample_rational(0, 1, source, 64)
        x2 = vadd(x1, vscale(vsub(x3, x1), t))
        try:
            relator = SplitRelator(base, (x1, x2, x3))
        except DegenerateConfiguration:
            continue
        if require_noncodegenerate and any(
            is_codegenerate(OrientedSimplex(w)) for w in relator._words()
        ):
            continue
        return relator
    raise DegenerateConfiguration("could not sample a valid relator")
