"""Exception types shared across the package."""


class AlgcheckError(Exception):
    """Base class for all errors raised by this package."""


class ShapeError(AlgcheckError):
    """Dimension or coordinate-length mismatch."""


class EvennessError(AlgcheckError):
    """A matrix entry or structure constant links incompatible degrees."""


class InvalidRepresentationError(AlgcheckError):
    """A stored object violates its representation invariants
    (zero multiplier entry, odd-modulus exponent row, group too large, ...)."""


class MissingComponentError(AlgcheckError):
    """A check needs a product or map the algebra does not carry."""


class IncompatibilityError(AlgcheckError):
    """Two algebras do not share the grading data an operation requires."""


class SingularMapError(AlgcheckError):
    """An even linear map required to be invertible is singular."""


class SearchSpaceError(AlgcheckError):
    """An enumeration would exceed the configured bound."""


class HypothesisError(AlgcheckError):
    """A construction's hypothesis gate failed.  Carries the offending reports."""

    def __init__(self, message, reports=()):
        super().__init__(message)
        self.reports = list(reports)


class DocumentError(AlgcheckError):
    """A document failed to parse.  Carries a diagnostic code and location."""

    def __init__(self, code, message, location=None):
        loc = f" at {location}" if location else ""
        super().__init__(f"{code}{loc}: {message}")
        self.code = code
        self.location = location
