"""Exception hierarchy shared by the zzpoly modules."""


class ZZError(Exception):
    """Base class for every error raised by zzpoly."""


class ParameterError(ZZError, ValueError):
    """A structural parameter is out of range.

    ``field`` names the offending parameter so callers (and the CLI) can
    report it.
    """

    def __init__(self, field, value, reason="must be >= 1"):
        self.field = field
        self.value = value
        super().__init__(f"{field}={value!r}: {reason}")


class UnsupportedParameterError(ParameterError):
    """Parameters outside the domain of a special-case formula."""


class ZeroPolynomialError(ZZError, ValueError):
    pass


class NonKekuleanError(ZeroPolynomialError):
    """The structure admits no Clar cover (its ZZ polynomial is 0)."""


class ParseError(ZZError, ValueError):
    pass


class MalformedDocumentError(ParseError):
    pass


class CoordinateError(ParseError):
    pass


class DuplicateHexagonError(ParseError):
    pass


class EmptyBenzenoidError(ParseError):
    pass


class UnsupportedGeometryError(ZZError, ValueError):
    """Interface analysis needs every hexagon row to be a contiguous chain."""


class ShapeInconsistencyError(ZZError, RuntimeError):
    pass


class InvalidCoverError(ZZError, ValueError):
    pass


class TheoremViolationError(ZZError, RuntimeError):
    pass
