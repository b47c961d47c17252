"""Three exact routes to the volume of a polytope.

Direct: triangulate and add cell volumes.  Dual: triangulate the polar body
and add signed volumes of the polar cells.  Vertex formula: rational function
of the vertices, their edge directions, and a generic linear functional.
All three agree as reduced fractions.
"""

from filliman import (
    RandomSource,
    direct_volume,
    fan_triangulation,
    filliman_volume,
    format_rational,
    lawrence_volume,
    sample_rational,
)
from filliman.errors import NonGenericFunctional
from filliman.sampling import random_simple_polytope

for d in (2, 3):
    print(f"--- dimension {d} ---")
    src = RandomSource(40 + d)
    for trial in range(3):
        p = random_simple_polytope(d, src.split(trial))
        direct = direct_volume(fan_triangulation(p, p.vertices[0]).chain)
        dual = filliman_volume(p, src.split(10 + trial))
        func_src = src.split(20 + trial)
        while True:
            c = tuple(sample_rational(-9, 9, func_src, 2**10) for _ in range(d))
            try:
                vertex = lawrence_volume(p, c)
                break
            except NonGenericFunctional:
                continue
        agree = direct == dual.value == vertex.value
        print(
            f"  {len(p.vertices):2d} vertices: volume {format_rational(direct)}"
            f"  [dual terms {dual.term_count}, vertex terms {vertex.term_count},"
            f" all agree: {agree}]"
        )
