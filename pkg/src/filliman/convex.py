"""Convex polytopes from vertex data, all in exact arithmetic.

The hull is built incrementally (beneath-beyond) over lexicographically
sorted input points, keeping a simplicial boundary complex; true facets are
recovered afterwards by merging coplanar simplicial pieces, and extreme
points are the ones whose incident facet normals span the whole space.
Supported envelope is dimension <= 4.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

from .errors import (
    ApexOutside,
    CodegeneratePolytope,
    ExhaustedSampling,
    NotFullDimensional,
)
from .exact import RandomSource, det_rows, sample_rational
from .chains import SimplexChain, canonical_positive
from .geometry import (
    Hyperplane,
    OrientedSimplex,
    Point,
    Region,
    as_point,
    is_codegenerate,
    points_box,
    vdot,
    vscale,
    vsub,
)


@dataclass(frozen=True)
class Facet:
    """A true facet: supporting hyperplane plus the vertices lying on it.

    The inequality <normal, x> <= offset holds on the whole polytope.
    """

    plane: Hyperplane
    vertex_indices: tuple[int, ...]


@dataclass(frozen=True)
class ConvexPolytope:
    """Full-dimensional convex polytope: extreme points plus derived facets."""

    dim: int
    vertices: tuple[Point, ...]
    facets: tuple[Facet, ...]


@dataclass(frozen=True)
class Triangulation:
    """Cells with disjoint interiors tiling the polytope, all coefficient +1."""

    polytope: ConvexPolytope
    cells: tuple[OrientedSimplex, ...]
    chain: SimplexChain


def _reduce_against(basis: list[list[Fraction]], vec: Sequence[Fraction]) -> list[Fraction] | None:
    """Reduce vec against a row-echelon basis; None if it is dependent."""
    v = list(vec)
    for row in basis:
        lead = next(i for i, x in enumerate(row) if x != 0)
        if v[lead] != 0:
            factor = v[lead] / row[lead]
            v = [a - factor * b for a, b in zip(v, row)]
    if all(x == 0 for x in v):
        return None
    return v


def _rank(vectors: Iterable[Sequence[Fraction]]) -> int:
    basis: list[list[Fraction]] = []
    for v in vectors:
        reduced = _reduce_against(basis, v)
        if reduced is not None:
            basis.append(reduced)
    return len(basis)


def _normal_through(points: Sequence[Point]) -> Point | None:
    """Normal of the hyperplane through d points of dimension d (None if flat).

    Computed as the generalized cross product of the difference vectors, via
    cofactor expansion; for d = 1 the empty product yields the normal (1,).
    """
    d = len(points[0])
    diffs = [vsub(p, points[0]) for p in points[1:]]
    normal = []
    for k in range(d):
        minor = [[row[j] for j in range(d) if j != k] for row in diffs]
        cof = det_rows(minor) if minor else Fraction(1)
        normal.append(cof if k % 2 == 0 else -cof)
    if all(x == 0 for x in normal):
        return None
    return tuple(normal)


class _HullBuilder:
    """Incremental simplicial hull over pre-sorted points."""

    def __init__(self, pts: list[Point], dim: int):
        self.pts = pts
        self.dim = dim
        self.facet_vertices: dict[int, tuple[int, ...]] = {}
        self.facet_planes: dict[int, tuple[Point, Fraction]] = {}
        self.ridge_map: dict[frozenset[int], list[int]] = {}
        self.next_id = 0
        self.interior: Point | None = None

    def _add_facet(self, vidx: tuple[int, ...]) -> None:
        pts = [self.pts[i] for i in vidx]
        normal = _normal_through(pts)
        assert normal is not None, "horizon produced a flat facet"
        offset = vdot(normal, pts[0])
        side = vdot(normal, self.interior) - offset
        assert side != 0, "facet hyperplane through the interior reference"
        if side > 0:
            normal = vscale(normal, -1)
            offset = -offset
        fid = self.next_id
        self.next_id += 1
        self.facet_vertices[fid] = vidx
        self.facet_planes[fid] = (normal, offset)
        for skip in vidx:
            ridge = frozenset(v for v in vidx if v != skip)
            self.ridge_map.setdefault(ridge, []).append(fid)

    def _drop_facet(self, fid: int) -> None:
        vidx = self.facet_vertices.pop(fid)
        self.facet_planes.pop(fid)
        for skip in vidx:
            ridge = frozenset(v for v in vidx if v != skip)
            incident = self.ridge_map[ridge]
            incident.remove(fid)
            if not incident:
                del self.ridge_map[ridge]

    def seed_simplex(self, base_idx: list[int]) -> None:
        d = self.dim
        centroid = tuple(
            sum((self.pts[i][k] for i in base_idx), Fraction(0)) / (d + 1)
            for k in range(d)
        )
        self.interior = centroid
        for omit in base_idx:
            self._add_facet(tuple(sorted(i for i in base_idx if i != omit)))

    def insert(self, p_idx: int) -> None:
        x = self.pts[p_idx]
        visible = [
            fid
            for fid in sorted(self.facet_vertices)
            if vdot(self.facet_planes[fid][0], x) > self.facet_planes[fid][1]
        ]
        if not visible:
            return  # inside or on the current boundary; never extreme later
        visible_set = set(visible)
        horizon: set[frozenset[int]] = set()
        for fid in visible:
            vidx = self.facet_vertices[fid]
            for skip in vidx:
                ridge = frozenset(v for v in vidx if v != skip)
                neighbors = self.ridge_map[ridge]
                if any(g not in visible_set for g in neighbors):
                    horizon.add(ridge)
        for fid in visible:
            self._drop_facet(fid)
        for ridge in sorted(horizon, key=sorted):
            self._add_facet(tuple(sorted((*ridge, p_idx))))


def convex_hull(points: Iterable[Sequence]) -> ConvexPolytope:
    """Exact convex hull; deterministic for a given input point set.

    Raises NotFullDimensional when the points do not affinely span the
    ambient space.
    """
    pts = sorted(set(as_point(p) for p in points))
    if not pts:
        raise NotFullDimensional("no input points")
    dim = len(pts[0])
    if any(len(p) != dim for p in pts):
        raise ValueError("mixed point dimensions")

    # greedy affinely independent seed simplex, in lexicographic order
    base_idx = [0]
    basis: list[list[Fraction]] = []
    for i in range(1, len(pts)):
        reduced = _reduce_against(basis, vsub(pts[i], pts[0]))
        if reduced is not None:
            basis.append(reduced)
            base_idx.append(i)
        if len(base_idx) == dim + 1:
            break
    if len(base_idx) < dim + 1:
        raise NotFullDimensional(
            f"points span an affine subspace of dimension {len(base_idx) - 1}"
        )

    builder = _HullBuilder(pts, dim)
    builder.seed_simplex(base_idx)
    seeded = set(base_idx)
    for i in range(len(pts)):
        if i not in seeded:
            builder.insert(i)

    # merge coplanar simplicial facets into true facets
    groups: dict[tuple[Point, Fraction], set[int]] = {}
    for fid, vidx in builder.facet_vertices.items():
        normal, offset = builder.facet_planes[fid]
        plane = Hyperplane(normal, offset).canonical()
        key = (plane.normal, plane.offset)
        groups.setdefault(key, set()).update(vidx)

    # a boundary point is extreme iff its incident facet normals span R^d
    incident: dict[int, list[Point]] = {}
    for (normal, _offset), vset in groups.items():
        for v in vset:
            incident.setdefault(v, []).append(normal)
    extreme = sorted(i for i, ns in incident.items() if _rank(ns) == dim)
    new_index = {old: new for new, old in enumerate(extreme)}
    vertices = tuple(pts[i] for i in extreme)
    facets = tuple(
        Facet(
            Hyperplane(normal, offset),
            tuple(sorted(new_index[v] for v in vset if v in new_index)),
        )
        for (normal, offset), vset in sorted(groups.items())
    )
    return ConvexPolytope(dim, vertices, facets)


def region_of_point(p: ConvexPolytope, x: Point) -> Region:
    """Classify x against the closed polytope via its facet inequalities."""
    on_boundary = False
    for facet in p.facets:
        value = facet.plane.evaluate(x)
        if value > 0:
            return Region.OUTSIDE
        if value == 0:
            on_boundary = True
    return Region.BOUNDARY if on_boundary else Region.INSIDE


def polytope_is_codegenerate(p: ConvexPolytope) -> bool:
    return any(f.plane.contains_origin() for f in p.facets)


def polar_body(p: ConvexPolytope) -> ConvexPolytope:
    """Polar polytope; requires the origin strictly inside p.

    Vertices of the polar are the facet normals of p scaled so each facet
    inequality reads <a, x> <= 1; applying polar_body twice returns the
    original vertex set.
    """
    from .errors import OriginNotInterior

    for facet in p.facets:
        if facet.plane.offset <= 0:
            raise OriginNotInterior(
                "every facet offset must be positive with outward normals"
            )
    return convex_hull(
        vscale(f.plane.normal, 1 / f.plane.offset) for f in p.facets
    )


def _facet_cells(
    p: ConvexPolytope, facet: Facet, pull: int
) -> list[tuple[Point, ...]]:
    """Triangulate one facet into (d-1)-simplices, given as vertex tuples.

    The facet is projected onto d-1 coordinates (dropping one where its
    normal is nonzero, which is injective on the facet), hulled there, and
    fanned from the vertex selected by `pull`; cells lift back by vertex
    identity.  Recursion bottoms out at point facets of 1-dimensional
    polytopes.
    """
    corners = [p.vertices[i] for i in facet.vertex_indices]
    if p.dim == 1:
        return [(corners[0],)]
    drop = next(k for k, x in enumerate(facet.plane.normal) if x != 0)
    lift = {}
    projected = []
    for v in corners:
        image = tuple(x for k, x in enumerate(v) if k != drop)
        lift[image] = v
        projected.append(image)
    sub = convex_hull(projected)
    apex = sub.vertices[pull % len(sub.vertices)]
    subtri = fan_triangulation(sub, apex)
    return [tuple(lift[q] for q in cell.vertices) for cell in subtri.cells]


def fan_triangulation(
    p: ConvexPolytope, apex: Sequence, _pull: int = 0
) -> Triangulation:
    """Cone the apex over triangulated facets not containing it.

    The apex may be a vertex of p or any interior point; facets whose
    hyperplane passes through the apex are skipped (their cones would be
    flat).  The result tiles p with positively oriented cells.
    """
    apex_pt = as_point(apex)
    if region_of_point(p, apex_pt) is Region.OUTSIDE:
        raise ApexOutside(f"apex {apex_pt} lies outside the polytope")
    cells = []
    for facet in p.facets:
        if facet.plane.evaluate(apex_pt) == 0:
            continue
        for base in _facet_cells(p, facet, _pull):
            cell = canonical_positive((apex_pt,) + base)
            assert cell is not None, "fan produced a flat cell"
            cells.append(cell)
    cells_tuple = tuple(cells)
    chain = SimplexChain.from_terms(p.dim, ((1, c) for c in cells_tuple))
    return Triangulation(p, cells_tuple, chain)


@lru_cache(maxsize=128)
def _genericity_rows(p: ConvexPolytope) -> tuple[tuple[tuple[Point, ...], ...], tuple[tuple[Point, ...], ...]]:
    """Vertex subsets spanning the hyperplanes a generic basepoint must avoid.

    First group: affinely independent d-subsets (their affine hulls).  Second
    group: linearly independent (d-1)-subsets (hyperplanes through the origin
    they span together with it).
    """
    d = p.dim
    affine = []
    for sub in combinations(p.vertices, d):
        diffs = [vsub(v, sub[0]) for v in sub[1:]]
        if _rank(diffs) == d - 1:
            affine.append(sub)
    linear = []
    for sub in combinations(p.vertices, d - 1):
        if _rank(sub) == d - 1:
            linear.append(sub)
    return tuple(affine), tuple(linear)


def generic_basepoint(
    p: ConvexPolytope, source: RandomSource, max_attempts: int = 512
) -> Point:
    """Interior point avoiding every vertex-spanned hyperplane of p.

    The point also avoids every hyperplane through the origin and d-1
    vertices, so a fan from it is free of origin-coplanar internal facets.
    Rejection-sampled from the bounding box; deterministic by seed.
    """
    d = p.dim
    lo, hi = points_box(p.vertices)
    affine, linear = _genericity_rows(p)
    for _ in range(max_attempts):
        x = tuple(sample_rational(lo[k], hi[k], source) for k in range(d))
        if region_of_point(p, x) is not Region.INSIDE:
            continue
        if any(det_rows([vsub(v, x) for v in sub]) == 0 for sub in affine):
            continue
        if any(det_rows([*sub, x]) == 0 for sub in linear):
            continue
        return x
    raise ExhaustedSampling(
        f"no generic interior point found in {max_attempts} attempts"
    )


def triangulate_non_codegenerate(
    p: ConvexPolytope,
    source: RandomSource,
    max_attempts: int = 32,
    use_vertex_fans: bool = True,
) -> Triangulation:
    """Triangulation in which no cell has a facet coplanar with the origin.

    Vertex fans are tried first (deterministic, no interior vertices); when
    every one of them has an origin-coplanar cell facet, fans from fresh
    generic interior basepoints are drawn until all cells pass, varying the
    facet triangulations between attempts.  Polytopes with a facet hyperplane
    through the origin are rejected outright; in dimension >= 3 a lower face
    whose affine hull meets the origin defeats every fan, which surfaces as
    ExhaustedSampling.
    """
    if polytope_is_codegenerate(p):
        raise CodegeneratePolytope(
            "a facet hyperplane of the polytope contains the origin"
        )
    if use_vertex_fans:
        for vertex in p.vertices:
            tri = fan_triangulation(p, vertex)
            if not any(is_codegenerate(cell) for cell in tri.cells):
                return tri
    for attempt in range(max_attempts):
        basepoint = generic_basepoint(p, source)
        tri = fan_triangulation(p, basepoint, _pull=attempt)
        if not any(is_codegenerate(cell) for cell in tri.cells):
            return tri
    raise ExhaustedSampling(
        f"no non-codegenerate fan found in {max_attempts} attempts; "
        "the polytope may have a lower face whose affine hull meets the origin"
    )


def polytope_volume(p: ConvexPolytope) -> Fraction:
    """Volume via the deterministic fan from the first vertex."""
    from .geometry import volume

    tri = fan_triangulation(p, p.vertices[0])
    return sum((volume(c) for c in tri.cells), Fraction(0))
