"""Exception types shared across the package."""


class FillimanError(Exception):
    """Base class for all package-specific errors."""


class DimensionMismatch(FillimanError):
    """Objects with different ambient dimensions were combined."""


class SingularMatrix(FillimanError):
    """A linear solve was attempted on a singular matrix."""


class DegenerateSimplex(FillimanError):
    """An operation requiring affinely independent vertices got a flat simplex."""


class CodegenerateSimplex(FillimanError):
    """A facet hyperplane of the simplex passes through the origin."""


class NonGenericPoint(FillimanError):
    """The evaluation point lies on the boundary of some chain term."""


class NotFullDimensional(FillimanError):
    """The input points do not affinely span the ambient space."""


class OriginNotInterior(FillimanError):
    """The polytope does not strictly contain the origin."""


class ApexOutside(FillimanError):
    """The requested fan apex lies outside the polytope."""


class ExhaustedSampling(FillimanError):
    """Rejection sampling hit its iteration cap without success."""


class CodegeneratePolytope(FillimanError):
    """A facet hyperplane of the polytope passes through the origin."""


class NoNonCodegenerateTriangulation(CodegeneratePolytope):
    """No triangulation free of origin-coplanar cell facets could be produced."""


class CutNotOnOpenEdge(FillimanError):
    """The split point is not strictly between the chosen edge's endpoints."""


class DegenerateConfiguration(FillimanError):
    """A relator configuration produced a flat simplex."""


class NotSimplePolytope(FillimanError):
    """Some vertex has more than `dim` incident facets."""


class NonGenericFunctional(FillimanError):
    """The direction vector is orthogonal to some polytope edge."""


class NonGenericFrequency(FillimanError):
    """The frequency is orthogonal to a vertex difference of some term."""
