"""Exact polytope duality on signed simplicial chains.

The core object is an integer combination of oriented simplices, read as a
signed measure.  The duality involution swaps each simplex with its polar
simplex, signed by the number of facet hyperplanes separating it from the
origin; restricted to convex polytopes containing the origin it recovers the
polar body.  Everything except the Fourier layer runs in exact rational
arithmetic.
"""

from .errors import (
    ApexOutside,
    CodegeneratePolytope,
    CodegenerateSimplex,
    CutNotOnOpenEdge,
    DegenerateConfiguration,
    DegenerateSimplex,
    DimensionMismatch,
    ExhaustedSampling,
    FillimanError,
    NoNonCodegenerateTriangulation,
    NonGenericFrequency,
    NonGenericFunctional,
    NonGenericPoint,
    NotFullDimensional,
    NotSimplePolytope,
    OriginNotInterior,
    SingularMatrix,
)
from .exact import (
    Matrix,
    RandomSource,
    Rational,
    det,
    format_rational,
    rational,
    sample_rational,
    solve_linear,
)
from .geometry import (
    Hyperplane,
    OrientedSimplex,
    Point,
    Region,
    barycentric,
    contains,
    is_codegenerate,
    moments,
    orientation,
    point,
    simplex,
    translate_point,
    translate_simplex,
    volume,
)
from .chains import (
    MeasureVerdict,
    MomentSignature,
    SimplexChain,
    bounding_box,
    canonical_positive,
    measure_equal,
    moment_signature,
    multiplicity,
)
from .duality import (
    dualize_chain,
    dualize_polytope,
    polar_simplex,
    separation_count,
)
from .convex import (
    ConvexPolytope,
    Facet,
    Triangulation,
    convex_hull,
    fan_triangulation,
    generic_basepoint,
    polar_body,
    polytope_volume,
    region_of_point,
    triangulate_non_codegenerate,
)
from .dissection import SplitRelator, elementary_split, random_refine, relator_chain
from .transforms import (
    FourierValue,
    VolumeReport,
    direct_volume,
    filliman_volume,
    fourier_transform,
    lawrence_volume,
)

__version__ = "0.1.0"
