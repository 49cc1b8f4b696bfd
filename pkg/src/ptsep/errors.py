"""Exception types shared across the package."""


class PtsepError(Exception):
    """Base class for all library errors."""


class LengthMismatch(PtsepError):
    """Sequences that must share a length do not."""


class ShapeMismatch(PtsepError):
    """Operation requires a different ambient product of projective spaces."""


class ParseError(PtsepError):
    """Malformed point file."""


class ZeroVector(PtsepError):
    """A projective coordinate vector is identically zero."""


class DuplicatePoint(PtsepError):
    """Two listed points are projectively equal."""


class PointNotFound(PtsepError):
    """The named point is not a member of the set."""


class InsufficientCoordinates(PtsepError):
    """Not enough distinct coordinates supplied for a grid construction."""


class NotASeparatorDegree(PtsepError):
    """Requested degree does not carry a one-dimensional separator space."""


class DegreeNotAbove(PtsepError):
    """Target degree is not componentwise above the form's degree."""


class BoxTooSmall(PtsepError):
    """Search box shows no Hilbert-function difference; enlarge it."""


class NotACM(PtsepError):
    """Operation requires an arithmetically Cohen-Macaulay configuration."""


class NotCancellable(PtsepError):
    """No trivial-complex pair with that shift at the given indices."""
