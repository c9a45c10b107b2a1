"""Exception hierarchy shared across the package."""


class PolarizeError(Exception):
    """Base class for every error raised by polarize."""


class ParseError(PolarizeError, ValueError):
    """Malformed polynomial expression or ratio literal.

    ``position`` is the 0-based character offset of the offending token,
    or ``None`` when the error is not tied to a location.
    """

    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class DegreeError(PolarizeError, ValueError):
    """A polynomial exceeds the requested polarization degree."""


class FrameError(PolarizeError, ValueError):
    """Degenerate affine frame or a parameter outside the frame's kind."""


class ZeroWeightError(PolarizeError, ArithmeticError):
    """A weight vanished where an affine point was required."""

    def __init__(self, message, index=None):
        self.index = index
        super().__init__(message)


class OracleLimitError(PolarizeError, ValueError):
    """Problem size exceeds what the brute-force oracles will enumerate."""
