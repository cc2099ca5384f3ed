"""Exception types shared across the package."""


class GybError(Exception):
    """Base class for every error this package raises deliberately."""


class ShapeError(GybError, ValueError):
    """Operands have incompatible dimensions or a malformed shape."""


class PartialTraceError(GybError, ValueError):
    """Partial trace requested over an invalid number of factors."""


class SingularMatrixError(GybError, ValueError):
    """Inversion failed or left a residual above tolerance."""


class BraidParseError(GybError, ValueError):
    """Braid text, a braid word, or a link catalog entry is malformed."""


class OperatorFileError(GybError, ValueError):
    """An operator file does not follow the documented layout."""


class EnhancementError(GybError, ValueError):
    """Enhancement data is unusable: non-invertible scaling matrix, zero
    scalars, or the scaling matrix fails to commute with the operator."""


class ResourceCapError(GybError, RuntimeError):
    """The requested computation exceeds the default size cap."""
