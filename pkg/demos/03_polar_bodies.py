"""Polar bodies and the duality of whole polytopes.

For a convex polytope with the origin strictly inside, the dual of any
triangulation is measure-equal to the polar body -- independent of which
triangulation was dualized.
"""

from fractions import Fraction

from filliman import (
    RandomSource,
    convex_hull,
    dualize_chain,
    dualize_polytope,
    measure_equal,
    polar_body,
    triangulate_non_codegenerate,
)

f = Fraction

square = convex_hull([(-1, -1), (1, -1), (1, 1), (-1, 1)])
cross = polar_body(square)
print("polar of [-1,1]^2:", [tuple(map(str, v)) for v in cross.vertices])
print("polar of the polar:", [tuple(map(str, v)) for v in polar_body(cross).vertices])

dual_chain = dualize_polytope(square, RandomSource(1))
cross_chain = triangulate_non_codegenerate(cross, RandomSource(2)).chain
verdict = measure_equal(dual_chain, cross_chain, 300, RandomSource(3))
print(
    f"dual chain vs polar-body triangulation: equal={verdict.equal} "
    f"({verdict.samples_tested} witnesses tried)"
)

pentagon = convex_hull(
    [(1, 0), (f(1, 3), 1), (-1, f(2, 3)), (-1, -f(2, 3)), (f(1, 3), -1)]
)
print("\npentagon has", len(pentagon.vertices), "vertices;",
      "its polar has", len(polar_body(pentagon).vertices))

# two different triangulations, one dual measure
t1 = triangulate_non_codegenerate(pentagon, RandomSource(4), use_vertex_fans=False)
t2 = triangulate_non_codegenerate(pentagon, RandomSource(5), use_vertex_fans=False)
print("triangulations differ:", t1.chain != t2.chain)
verdict = measure_equal(
    dualize_chain(t1.chain), dualize_chain(t2.chain), 300, RandomSource(6)
)
print("their duals are measure-equal:", verdict.equal)
