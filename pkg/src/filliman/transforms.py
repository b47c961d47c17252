"""Volume algorithms and Fourier transforms of polytopal measures.

Three volume routes are provided: summing a triangulation directly, dualizing
a triangulation of the polar body and summing signed polar-cell volumes, and
the vertex formula that realizes the limiting orthant decomposition at the
vertices of a simple polytope.  All three agree exactly as rationals.  The
Fourier transform is the package's only floating-point surface.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .errors import NonGenericFrequency, NonGenericFunctional, NotSimplePolytope
from .exact import Matrix, RandomSource, det, rational
from .chains import SimplexChain
from .convex import ConvexPolytope, polar_body, triangulate_non_codegenerate
from .duality import polar_simplex, separation_count
from .geometry import Point, vdot, volume, vsub


@dataclass(frozen=True)
class VolumeReport:
    value: Fraction
    method: str
    term_count: int


@dataclass(frozen=True)
class FourierValue:
    frequency: Point
    value: complex


def direct_volume(c: SimplexChain) -> Fraction:
    """Signed total measure: coefficient-weighted sum of cell volumes."""
    return sum((coeff * volume(s) for coeff, s in c.terms), Fraction(0))


def filliman_volume(
    p: ConvexPolytope, source: RandomSource | None = None
) -> VolumeReport:
    """Volume through the dual route.

    Triangulates the polar body with non-codegenerate cells and sums the
    volumes of their polar simplices with alternating signs; exactly equal to
    the direct volume whenever the origin is interior to p.
    """
    if source is None:
        source = RandomSource(0)
    polar = polar_body(p)
    tri = triangulate_non_codegenerate(polar, source)
    total = Fraction(0)
    for cell in tri.cells:
        sign = -1 if separation_count(cell) % 2 else 1
        total += sign * volume(polar_simplex(cell))
    return VolumeReport(total, "filliman", len(tri.cells))


def _vertex_neighbors(p: ConvexPolytope) -> list[list[int]]:
    """Adjacency of a simple polytope; raises NotSimplePolytope otherwise.

    A vertex of a simple d-polytope lies on exactly d facets, and two
    vertices are adjacent exactly when they share d-1 of them.
    """
    d = p.dim
    facets_of = [frozenset() for _ in p.vertices]
    sets: list[set[int]] = [set() for _ in p.vertices]
    for fi, facet in enumerate(p.facets):
        for v in facet.vertex_indices:
            sets[v].add(fi)
    facets_of = [frozenset(s) for s in sets]
    for i, fs in enumerate(facets_of):
        if len(fs) != d:
            raise NotSimplePolytope(
                f"vertex {p.vertices[i]} lies on {len(fs)} facets, expected {d}"
            )
    neighbors: list[list[int]] = [[] for _ in p.vertices]
    n = len(p.vertices)
    for i in range(n):
        for j in range(i + 1, n):
            if len(facets_of[i] & facets_of[j]) == d - 1:
                neighbors[i].append(j)
                neighbors[j].append(i)
    for i, ns in enumerate(neighbors):
        if len(ns) != d:
            raise NotSimplePolytope(
                f"vertex {p.vertices[i]} has {len(ns)} incident edges, expected {d}"
            )
    return neighbors


def lawrence_volume(p: ConvexPolytope, c: Point) -> VolumeReport:
    """Vertex formula for the volume of a simple polytope.

    For each vertex v with edge directions u_1..u_d toward its neighbors, the
    term is <c, v>^d |det(u_1..u_d)| / prod_j <c, u_j>; the total times
    (-1)^d / d! is the volume.  Each term is invariant under positive
    rescaling of the u_j.  The functional c must be non-orthogonal to every
    edge direction.
    """
    d = p.dim
    neighbors = _vertex_neighbors(p)
    total = Fraction(0)
    for i, v in enumerate(p.vertices):
        dirs = [vsub(p.vertices[j], v) for j in neighbors[i]]
        denominator = Fraction(1)
        for u in dirs:
            pairing = vdot(c, u)
            if pairing == 0:
                raise NonGenericFunctional(
                    f"functional {c} is orthogonal to edge direction {u}"
                )
            denominator *= pairing
        numerator = vdot(c, v) ** d * abs(det(Matrix(tuple(dirs))))
        total += numerator / denominator
    sign = -1 if d % 2 else 1
    return VolumeReport(sign * total / factorial(d), "lawrence", len(p.vertices))


def frequency_point(coords) -> Point:
    """Coerce a frequency vector; floats convert exactly (binary rationals)."""
    out = []
    for x in coords:
        if isinstance(x, float):
            out.append(Fraction(x))
        else:
            out.append(rational(x))
    return tuple(out)


def fourier_transform(ch: SimplexChain, xi) -> FourierValue:
    """Fourier transform of the chain's measure at the rational frequency xi.

    At xi = 0 the exact total measure is returned (as a double).  Otherwise
    each simplex contributes d! vol * sum_j exp(-i<xi, v_j>) / prod_{k != j}
    (i <xi, v_k - v_j>), which requires <xi, v_k - v_j> != 0 for every vertex
    pair of every term; violations raise NonGenericFrequency rather than
    falling back to confluent forms.
    """
    xi_pt = frequency_point(xi)
    if len(xi_pt) != ch.dim:
        raise ValueError(f"frequency dimension {len(xi_pt)} != chain dimension {ch.dim}")
    if all(x == 0 for x in xi_pt):
        return FourierValue(xi_pt, complex(float(direct_volume(ch)), 0.0))
    for _, s in ch.terms:
        pairings = [vdot(xi_pt, v) for v in s.vertices]
        for j in range(len(pairings)):
            for k in range(j + 1, len(pairings)):
                if pairings[j] == pairings[k]:
                    raise NonGenericFrequency(
                        f"frequency {xi_pt} is orthogonal to a vertex difference "
                        f"of term {s.vertices}"
                    )
    total = 0j
    for coeff, s in ch.terms:
        d = s.dim
        pairings = [float(vdot(xi_pt, v)) for v in s.vertices]
        scale = coeff * factorial(d) * float(volume(s))
        cell = 0j
        for j, aj in enumerate(pairings):
            denom = 1 + 0j
            for k, ak in enumerate(pairings):
                if k != j:
                    denom *= complex(0.0, ak - aj)
            cell += cmath.exp(complex(0.0, -aj)) / denom
        total += scale * cell
    return FourierValue(xi_pt, total)
