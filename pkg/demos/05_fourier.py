"""Fourier transforms of polytopal measures.

The per-simplex closed form needs no quadrature; measure-equal chains give
the same transform, so a polytope's transform can be computed from the dual
realization as well.
"""

import math

from filliman import (
    RandomSource,
    SimplexChain,
    convex_hull,
    dualize_chain,
    fan_triangulation,
    fourier_transform,
    polar_body,
    sample_rational,
    simplex,
    triangulate_non_codegenerate,
)

segment = SimplexChain.of(simplex((0,), (1,)))
for xi in (0.0, 1.0, math.pi, 10.0):
    value = fourier_transform(segment, (xi,)).value
    print(f"unit segment at xi = {xi:<18} -> {value:.12f}")

square = convex_hull([(-1, -1), (1, -1), (1, 1), (-1, 1)])
primal = fan_triangulation(square, square.vertices[0]).chain
dual = dualize_chain(
    triangulate_non_codegenerate(polar_body(square), RandomSource(1)).chain
)
print("\nsquare, primal chain terms:", len(primal.terms),
      "/ dual chain terms:", len(dual.terms))

src = RandomSource(2)
print("frequency -> primal vs dual (identical to double precision):")
for index in range(4):
    child = src.split(index)
    xi = tuple(sample_rational(-3, 3, child, 2**10) for _ in range(2))
    a = fourier_transform(primal, xi).value
    b = fourier_transform(dual, xi).value
    print(f"  {tuple(str(x) for x in xi)} -> {a:.12f} | {b:.12f}")
