from fractions import Fraction
from itertools import product

import pytest

from filliman.chains import multiplicity
from filliman.convex import (
    Region,
    convex_hull,
    fan_triangulation,
    generic_basepoint,
    polar_body,
    polytope_is_codegenerate,
    polytope_volume,
    region_of_point,
    triangulate_non_codegenerate,
)
from filliman.errors import (
    ApexOutside,
    CodegeneratePolytope,
    NotFullDimensional,
    OriginNotInterior,
)
from filliman.exact import RandomSource
from filliman.geometry import barycentric, is_codegenerate, point, simplex, volume
from filliman.sampling import random_polytope


def shoelace(vertices):
    total = Fraction(0)
    n = len(vertices)
    for i in range(n):
        x1, y1 = vertices[i]
        x2, y2 = vertices[(i + 1) % n]
        total += x1 * y2 - x2 * y1
    return abs(total) / 2


def test_hull_drops_interior_point():
    p = convex_hull([(-1, -1), (1, -1), (1, 1), (-1, 1), (0, 0)])
    assert len(p.vertices) == 4
    assert len(p.facets) == 4


def test_hull_octahedron_combinatorics():
    p = convex_hull(
        [(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1)]
    )
    assert len(p.vertices) == 6
    assert len(p.facets) == 8
    assert all(len(f.vertex_indices) == 3 for f in p.facets)


def test_hull_collinear_raises():
    with pytest.raises(NotFullDimensional):
        convex_hull([(0, 0), (1, 1), (2, 2)])


def test_hull_drops_edge_midpoint():
    p = convex_hull([(0, 0), (1, 0), (2, 0), (0, 1)])
    assert set(p.vertices) == {point(0, 0), point(2, 0), point(0, 1)}


def test_hull_idempotent():
    p = random_polytope(3, RandomSource(13))
    again = convex_hull(p.vertices)
    assert again == p


def test_hull_one_dimensional():
    p = convex_hull([(3,), (-2,), (0,)])
    assert p.vertices == (point(-2), point(3))
    assert len(p.facets) == 2


def test_hull_four_dimensional_cube_and_cross():
    cube = convex_hull(list(product((0, 1), repeat=4)))
    assert (len(cube.vertices), len(cube.facets)) == (16, 8)
    cross = convex_hull(
        [
            tuple(s if i == k else 0 for i in range(4))
            for k in range(4)
            for s in (1, -1)
        ]
    )
    assert (len(cross.vertices), len(cross.facets)) == (8, 16)


def test_facet_planes_support_polytope():
    p = random_polytope(3, RandomSource(19))
    for facet in p.facets:
        values = [facet.plane.evaluate(v) for v in p.vertices]
        assert all(v <= 0 for v in values)
        on_plane = [i for i, v in enumerate(values) if v == 0]
        assert tuple(sorted(on_plane)) == facet.vertex_indices
        assert len(on_plane) >= p.dim


def test_polar_body_of_square(unit_square):
    polar = polar_body(unit_square)
    assert set(polar.vertices) == {
        point(1, 0),
        point(-1, 0),
        point(0, 1),
        point(0, -1),
    }


def test_polar_body_round_trip():
    p = random_polytope(3, RandomSource(23))
    assert polar_body(polar_body(p)).vertices == p.vertices


def test_polar_body_requires_origin(right_offset_square):
    with pytest.raises(OriginNotInterior):
        polar_body(right_offset_square)


def test_fan_pentagon_from_vertex(pentagon):
    tri = fan_triangulation(pentagon, pentagon.vertices[0])
    assert len(tri.cells) == 3


def test_fan_square_from_vertex(unit_square):
    assert len(fan_triangulation(unit_square, (-1, -1)).cells) == 2


def test_fan_cube_from_vertex():
    cube = convex_hull(list(product((0, 1), repeat=3)))
    tri = fan_triangulation(cube, (0, 0, 0))
    assert len(tri.cells) == 6
    assert sum(volume(c) for c in tri.cells) == 1


def test_fan_apex_outside_raises(unit_square):
    with pytest.raises(ApexOutside):
        fan_triangulation(unit_square, (3, 0))


def test_fan_volume_matches_shoelace(pentagon):
    apex = generic_basepoint(pentagon, RandomSource(3))
    tri = fan_triangulation(pentagon, apex)
    assert sum(volume(c) for c in tri.cells) == shoelace(
        [
            (1, 0),
            (Fraction(1, 3), 1),
            (-1, Fraction(2, 3)),
            (-1, -Fraction(2, 3)),
            (Fraction(1, 3), -1),
        ]
    )
    assert polytope_volume(pentagon) == Fraction(26, 9)


def test_two_triangulations_same_volume():
    p = random_polytope(3, RandomSource(29))
    a = fan_triangulation(p, p.vertices[0])
    b = fan_triangulation(p, generic_basepoint(p, RandomSource(30)))
    va = sum(volume(c) for c in a.cells)
    vb = sum(volume(c) for c in b.cells)
    assert va == vb == polytope_volume(p)


def test_generic_basepoint_contract(unit_square):
    b1 = generic_basepoint(unit_square, RandomSource(42))
    b2 = generic_basepoint(unit_square, RandomSource(42))
    assert b1 == b2
    assert region_of_point(unit_square, b1) is Region.INSIDE
    x, y = b1
    assert x != y and x != -y  # off both diagonals
    assert x != 0 and y != 0  # off both axes


def test_generic_basepoint_in_simplex_interior():
    p = convex_hull([(1, 0), (0, 1), (-1, -1)])
    b = generic_basepoint(p, RandomSource(17))
    lam = barycentric(simplex((1, 0), (0, 1), (-1, -1)), b)
    assert all(0 < x < 1 for x in lam)


def test_triangulate_non_codegenerate_diag_square(diag_offset_square):
    tri = triangulate_non_codegenerate(diag_offset_square, RandomSource(19))
    assert not any(is_codegenerate(c) for c in tri.cells)
    assert sum(volume(c) for c in tri.cells) == 1


def test_triangulate_non_codegenerate_rejects_codegenerate_polytope():
    p = convex_hull([(1, 1), (3, 3), (1, 4)])
    assert polytope_is_codegenerate(p)
    with pytest.raises(CodegeneratePolytope):
        triangulate_non_codegenerate(p, RandomSource(21))


def test_triangulation_chain_is_indicator(unit_square):
    from filliman.errors import NonGenericPoint
    from filliman.sampling import random_rational_point

    tri = triangulate_non_codegenerate(unit_square, RandomSource(23))
    src = RandomSource(24)
    checked = 0
    index = 0
    while checked < 60:
        p = random_rational_point(
            2, src.split(index), lo=-2, hi=2, max_denominator=2**20
        )
        index += 1
        try:
            value = multiplicity(tri.chain, p)
        except NonGenericPoint:
            continue
        region = region_of_point(unit_square, p)
        if region is Region.INSIDE:
            assert value == 1
        elif region is Region.OUTSIDE:
            assert value == 0
        checked += 1
