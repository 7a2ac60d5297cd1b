"""Exception hierarchy. Infeasibility is never an exception; it is reported."""


class ConjulinError(Exception):
    """Base class for every error raised by this package."""


class DimensionMismatch(ConjulinError, ValueError):
    pass


class NotHermitian(ConjulinError, ValueError):
    pass


class NotPositiveDefinite(ConjulinError, ValueError):
    pass


class SingularTriangular(ConjulinError, ValueError):
    pass


class RankExceedsK(ConjulinError, ValueError):
    pass


class NotReducible(ConjulinError, ValueError):
    pass


class SingularM(ConjulinError, ValueError):
    pass


class OddDimension(ConjulinError, ValueError):
    pass


class ConvergenceError(ConjulinError, RuntimeError):
    pass


class ParseError(ConjulinError, ValueError):
    def __init__(self, message, line=None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class DimensionError(ParseError):
    pass
