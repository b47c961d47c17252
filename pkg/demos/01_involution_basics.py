"""Tour of the core objects: simplices, polar simplices, and the involution.

Every quantity printed here is an exact rational; rerunning the script always
produces identical output.
"""

from filliman import (
    SimplexChain,
    dualize_chain,
    format_rational,
    polar_simplex,
    separation_count,
    simplex,
    volume,
)


def show(label, value):
    print(f"{label:<44} {value}")


# A segment on the positive axis: one supporting point separates it from 0.
seg = simplex((1,), (3,))
show("segment [1, 3] separation count", separation_count(seg))
show("its polar simplex", [v[0] for v in polar_simplex(seg).vertices])

chain = SimplexChain.of(seg)
dual = dualize_chain(chain)
print()
print("dualizing the chain [1,3]:")
for coeff, s in dual.terms:
    show(f"  coefficient {coeff:+d}", [format_rational(v[0]) for v in s.vertices])
show("dualizing twice returns the original", dualize_chain(dual) == chain)

# A triangle with the origin in its interior keeps its sign under the map.
tri = simplex((1, 0), (0, 1), (-1, -1))
print()
show("triangle around the origin, separation", separation_count(tri))
show("its polar triangle", [tuple(map(str, v)) for v in polar_simplex(tri).vertices])
show("volume / polar volume",
     f"{format_rational(volume(tri))} / {format_rational(volume(polar_simplex(tri)))}")

# The involution is additive, so it extends to arbitrary integer chains.
mixed = SimplexChain.from_words(
    2,
    [
        (2, [(1, 0), (0, 1), (-1, -1)]),
        (-1, [(1, 1), (4, 1), (1, 4)]),
    ],
)
print()
show("a two-term chain dualizes to", len(dualize_chain(mixed).terms))
show("and comes back unchanged", dualize_chain(dualize_chain(mixed)) == mixed)
