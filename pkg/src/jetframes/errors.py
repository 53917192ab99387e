"""Exception types shared across the package."""


class JetFramesError(Exception):
    """Base class for all errors raised by this package."""


class SingularMatrixError(JetFramesError):
    """Matrix inversion was requested for a matrix with zero determinant."""


class CompositionDomainError(JetFramesError):
    """Two jets were composed whose base/value points do not chain."""


class NotAFrameError(JetFramesError):
    """Jet data does not satisfy the frame invertibility conditions."""


class ParseError(JetFramesError):
    """A JSON document does not match the expected schema."""


class GroupMismatchError(JetFramesError):
    """An operation received elements of the wrong group tag."""


class KindMismatchError(JetFramesError):
    """A projection was applied to a frame of an incompatible kind."""
