"""The duality involution on simplicial chains.

Each non-codegenerate simplex has a polar simplex: vertex i of the polar
solves <w, v_j> = 1 against every other vertex v_j of the original.  The
involution maps a canonical term with coefficient c to the polar vertex set
with coefficient c * (-1)^k, where k counts the facet hyperplanes separating
the simplex from the origin.  In this representation applying the map twice
fixes every canonical term exactly.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import (
    CodegeneratePolytope,
    CodegenerateSimplex,
    DegenerateSimplex,
    NoNonCodegenerateTriangulation,
    SingularMatrix,
)
from .exact import Matrix, RandomSource, solve_linear
from .chains import SimplexChain, canonical_positive
from .geometry import OrientedSimplex, orientation, origin_barycentric


def separation_count(s: OrientedSimplex) -> int:
    """Number of facet hyperplanes of s separating it from the origin.

    A facet separates exactly when the opposite vertex's barycentric
    coordinate of the origin is negative.  Zero iff the origin is interior.
    """
    lam = origin_barycentric(s)
    if any(x == 0 for x in lam):
        raise CodegenerateSimplex(
            f"a facet hyperplane of {s.vertices} passes through the origin"
        )
    return sum(1 for x in lam if x < 0)


def polar_simplex(s: OrientedSimplex) -> OrientedSimplex:
    """Polar simplex, vertex order preserved.

    Vertex i solves <w, v_j> = 1 for all j != i; the system is singular
    exactly when the facet opposite vertex i is coplanar with the origin.
    """
    if orientation(s) == 0:
        raise DegenerateSimplex(f"flat simplex {s.vertices}")
    d = s.dim
    polar = []
    for i in range(d + 1):
        rows = tuple(s.vertices[j] for j in range(d + 1) if j != i)
        try:
            w = solve_linear(Matrix(rows), [Fraction(1)] * d)
        except SingularMatrix as exc:
            raise CodegenerateSimplex(
                f"facet opposite vertex {i} of {s.vertices} "
                "is coplanar with the origin"
            ) from exc
        polar.append(w)
    return OrientedSimplex(tuple(polar))


def dualize_simplex_term(coeff: int, s: OrientedSimplex) -> tuple[int, OrientedSimplex]:
    """Map one canonical term; the polar region enters positively oriented."""
    sign = -1 if separation_count(s) % 2 else 1
    polar = canonical_positive(polar_simplex(s).vertices)
    assert polar is not None  # the polar of a non-codegenerate simplex is full-dimensional
    return coeff * sign, polar


def dualize_chain(c: SimplexChain) -> SimplexChain:
    """Apply the involution term by term; requires non-codegenerate terms."""
    return SimplexChain.from_terms(
        c.dim, (dualize_simplex_term(coeff, s) for coeff, s in c.terms)
    )


def dualize_polytope(p, source: RandomSource | None = None) -> SimplexChain:
    """Dualize a triangulation of the polytope.

    When the origin is interior to p the result is measure-equal to the
    characteristic chain of the polar body.  Triangulation cells are drawn
    from a generic interior basepoint, so the same seed gives the same chain.
    """
    from .convex import triangulate_non_codegenerate

    if source is None:
        source = RandomSource(0)
    try:
        tri = triangulate_non_codegenerate(p, source)
    except CodegeneratePolytope as exc:
        raise NoNonCodegenerateTriangulation(str(exc)) from exc
    return dualize_chain(tri.chain)
