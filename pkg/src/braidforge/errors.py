"""Exception hierarchy shared by all braidforge modules."""

from __future__ import annotations


class BraidforgeError(ValueError):
    """Base class for every domain error raised by the package."""


class InvalidParameterError(BraidforgeError):
    pass


class SingularMatrixError(BraidforgeError):
    pass


class DimensionMismatchError(BraidforgeError):
    pass


class NegativeCountError(BraidforgeError):
    """A summand collection yields a negative loop or arrow count."""


class DegenerateBaseChangeError(BraidforgeError):
    """The assembled base-change matrix is singular."""


class ReducibleParameterError(BraidforgeError):
    pass


class NonSquareError(BraidforgeError):
    """The dimension vector is unbalanced (a1 + a2 != b1 + b2 + b3)."""


class DuplicateLambdaError(BraidforgeError):
    pass


class NotSimpleError(BraidforgeError):
    """The labeled family quiver is not strongly connected on its nonzero arrows."""


class NonScalarCentralError(BraidforgeError):
    pass


class CatalogParseError(BraidforgeError):
    pass
