"""The two planar showcase figures: duals of squares that avoid the origin.

A square to the right of the origin dualizes to *negative* measure on a dart
shape; a square offset diagonally dualizes to the difference of two triangles
with disjoint interiors.  Both are rendered to SVG next to this script.
"""

from fractions import Fraction
from pathlib import Path

from filliman import (
    RandomSource,
    SimplexChain,
    convex_hull,
    dualize_chain,
    dualize_polytope,
    moment_signature,
    multiplicity,
    point,
)
from filliman.render import chain_to_svg

out_dir = Path(__file__).resolve().parent

# ---- square offset to the right -------------------------------------------
square = convex_hull([(1, -1), (3, -1), (3, 1), (1, 1)])
dual = dualize_polytope(square, RandomSource(0))
print("right-offset square -> dual chain:")
for coeff, s in dual.terms:
    print(f"  {coeff:+d}", [tuple(map(str, v)) for v in s.vertices])
print("total dual measure:", moment_signature(dual).total, "(minus the dart area)")
print("net multiplicity at (1/2, 1/6):", multiplicity(dual, point(Fraction(1, 2), Fraction(1, 6))))
print("net multiplicity at (2, 0):   ", multiplicity(dual, point(2, 0)))

svg_path = out_dir / "offset_square_dual.svg"
svg_path.write_text(chain_to_svg(dual))
print("wrote", svg_path)

# ---- square offset diagonally ----------------------------------------------
diag = SimplexChain.from_words(
    2, [(1, [(1, 1), (2, 1), (1, 2)]), (1, [(2, 1), (2, 2), (1, 2)])]
)
diag_dual = dualize_chain(diag)
print("\ndiagonally offset square -> dual chain (one positive, one negative):")
for coeff, s in diag_dual.terms:
    print(f"  {coeff:+d}", [tuple(map(str, v)) for v in s.vertices])

svg_path = out_dir / "diag_square_dual.svg"
svg_path.write_text(chain_to_svg(diag_dual))
print("wrote", svg_path)
