"""Exception types shared across the package."""


class VolrigError(Exception):
    """Base class for all package-specific errors."""


class BadParameters(VolrigError):
    """An argument is outside the range an operation supports."""


class InvalidFace(VolrigError):
    """A face has repeated, non-integer, or non-positive vertex labels."""


class VertexOutOfRange(VolrigError):
    """A vertex label exceeds the declared number of vertices."""


class MixedDimension(VolrigError):
    """Facets (or complexes being combined) do not share one cardinality."""


class EmptyFacetList(VolrigError):
    """A complex must carry at least one facet."""


class KOutOfRange(VolrigError):
    """Requested face dimension does not occur in the complex."""


class ApexCollision(VolrigError):
    """Cone apex label collides with an existing vertex."""


class NotAnEdge(VolrigError):
    """The vertex pair is not an edge of the complex."""


class ContractionAnnihilates(VolrigError):
    """Contracting the edge would leave no facets at all."""


class FaceTooLarge(VolrigError):
    """Query face has more vertices than a facet."""


class DimensionMismatch(VolrigError):
    """Matrix or vector shapes are incompatible."""


class NotInvertible(VolrigError):
    """Attempted to invert a zero (or non-unit) field element."""


class MissingVertexCoordinates(VolrigError):
    """A placement does not cover every vertex it is asked about."""


class SingularBasis(VolrigError):
    """Could not sample a nonsingular generic basis."""


class SizeExceedsDimension(VolrigError):
    """Compound coordinates are only defined up to the facet cardinality."""


class GenericityFailure(VolrigError):
    """Independent random trials disagreed on a generically constant value."""


class InstanceTooLarge(VolrigError):
    """Exhaustive sparsity checking refused an oversized instance."""


class NotSparse(VolrigError):
    """Completion requires a sparse starting complex."""


class ChainOutsideComplex(VolrigError):
    """A chain assigns a coefficient to a face the complex lacks."""


class FacetNotPresent(VolrigError):
    """The named facet is not in the complex."""


class ParseError(VolrigError):
    """Malformed complex file.  Carries a 1-based line number when known."""

    def __init__(self, message, line=None):
        if line is not None:
            message = "line %d: %s" % (line, message)
        super().__init__(message)
        self.line = line


class DatasetError(VolrigError):
    """A dataset directory fails its manifest (counts or checksums)."""
